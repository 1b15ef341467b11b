#include "bihole/generate.hpp"

#include <cmath>
#include <random>

#include "bihole/error.hpp"

namespace bihole {

const char* to_string(Model m) {
  switch (m) {
    case Model::Gnp: return "gnp";
    case Model::Complete: return "complete";
    case Model::Edgeless: return "edgeless";
    case Model::Matching: return "matching";
    case Model::Cycle: return "cycle";
    case Model::Crown: return "crown";
  }
  return "unknown";
}

Model parse_model(std::string_view name) {
  for (Model m : {Model::Gnp, Model::Complete, Model::Edgeless, Model::Matching, Model::Cycle,
                  Model::Crown}) {
    if (name == to_string(m)) return m;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown model '" + std::string(name) + "'");
}

BipartiteGraph generate(Model model, std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::InvalidSize, "n must be at least 1");
  if (model == Model::Cycle && n < 2) throw Error(ErrorKind::InvalidSize, "cycle needs n >= 2");
  if (model == Model::Gnp && !(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::InvalidProbability, "p = " + std::to_string(p));
  }

  std::vector<Edge> edges;
  switch (model) {
    case Model::Gnp: {
      std::mt19937_64 engine(seed);
      // p * 2^53 is exact in binary floating point.
      const double threshold = std::ldexp(p, 53);
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t r = 0; r < n; ++r) {
          const std::uint64_t x = engine() >> 11;
          if (static_cast<double>(x) < threshold) edges.emplace_back(l, r);
        }
      }
      break;
    }
    case Model::Complete:
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t r = 0; r < n; ++r) edges.emplace_back(l, r);
      break;
    case Model::Edgeless:
      break;
    case Model::Matching:
      for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, i);
      break;
    case Model::Cycle:
      for (std::size_t i = 0; i < n; ++i) {
        edges.emplace_back(i, i);
        edges.emplace_back(i, (i + 1) % n);
      }
      break;
    case Model::Crown:
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t r = 0; r < n; ++r)
          if (l != r) edges.emplace_back(l, r);
      break;
  }
  return BipartiteGraph(n, n, edges);
}

}  // namespace bihole
