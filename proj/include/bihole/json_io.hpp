#pragma once

#include <json.hpp>

#include "bihole/bounds.hpp"
#include "bihole/extract.hpp"
#include "bihole/oracle.hpp"

namespace bihole {

// Rationals serialize as {"num": "...", "den": "...", "approx": <double>}.
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const BiholeWitness& w);
// Adds "elimination_order": [["L", i], ["R", j], ...].
nlohmann::json to_json(const DegenerateWitness& w);
nlohmann::json to_json(const PeelStep& step);
nlohmann::json to_json(const PeelTrace& trace);

}  // namespace bihole
