#include <memory>
#include <string>

#include "medianlab/basic_groups.hpp"
#include "medianlab/circle.hpp"
#include "medianlab/cocycle.hpp"
#include "medianlab/error.hpp"
#include "medianlab/group.hpp"
#include "medianlab/lamplighter.hpp"
#include "medianlab/surface.hpp"

namespace medianlab {

namespace {

int parse_positive(const std::string& s, const std::string& who) {
  int v = 0;
  std::size_t used = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || v < 1)
    throw Error(ErrorKind::InvalidParam, who + ": expected a positive integer, got '" + s + "'");
  return v;
}

}  // namespace

std::unique_ptr<Group> make_group(const std::string& spec) {
  if (spec.rfind("free:", 0) == 0)
    return std::make_unique<FreeGroup>(parse_positive(spec.substr(5), "free"));
  if (spec.rfind("zk:", 0) == 0)
    return std::make_unique<FreeAbelianGroup>(parse_positive(spec.substr(3), "zk"));
  if (spec == "heisenberg") return std::make_unique<HeisenbergGroup>();
  if (spec == "lamplighter") return std::make_unique<LamplighterGroup>();
  if (spec.rfind("GI:I=", 0) == 0)
    return std::make_unique<TwistedGroup>(TwistSet::parse(spec.substr(5)));
  if (spec.rfind("surface:", 0) == 0)
    return std::make_unique<SurfaceGroup>(parse_positive(spec.substr(8), "surface"));
  if (spec == "T") return std::make_unique<TGroup>();
  if (spec == "Tbar") return std::make_unique<TBarGroup>();
  if (spec.rfind("ext:", 0) == 0)
    return std::make_unique<ExtensionGroup>(make_cocycle(spec.substr(4)));
  throw Error(ErrorKind::InvalidParam, "unknown group spec '" + spec + "'");
}

}  // namespace medianlab
