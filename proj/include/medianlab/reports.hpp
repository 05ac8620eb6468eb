#pragma once

#include <string>

#include "json.hpp"
#include "medianlab/cocycle.hpp"
#include "medianlab/experiments.hpp"
#include "medianlab/median.hpp"
#include "medianlab/presentation.hpp"

namespace medianlab {

// All reports share {"schema": "median-lab/1", "kind": ...} and use ordered
// JSON so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

extern const char* const kSchema;

Json report_median(const std::string& graph, const MedianReport& r);
Json report_frontier(const std::string& graph, const AlmostMedianFrontier& f);
Json report_hyperplanes(const std::string& graph, const std::vector<Hyperplane>& hs,
                        int dimension);
// Element texts are listed only up to element_cap entries; larger balls set
// "elements_omitted" instead of silently truncating.
Json report_ball(const CayleyBall& ball, std::size_t element_cap = 10000);
Json report_distortion(const DistortionProfile& p);
Json report_coarse(const CoarseEmbeddingReport& r);
Json report_cocycle_check(const CocycleCheckReport& r);
Json report_defect(const std::string& model, const DefectReport& r);
Json report_translation(const std::string& model, const std::string& element,
                        const TranslationReport& r);
Json report_euler(const std::string& g, const std::string& h, int value);
Json report_order(const std::string& model, const std::string& element,
                  const std::optional<long long>& order, long long bound);
Json report_relators(const std::string& presentation, const std::string& model, long long n_bound,
                     const RelatorCheckReport& r);
Json report_homcount(const HomCountReport& r);
Json report_separation(const std::string& a, const std::string& b,
                       const std::vector<std::string>& targets, const SeparationVerdict& v);

// CSV projection of the tabular report kinds (cayley_ball, distortion,
// coarse_embedding, frontier); anything else flattens to key,value rows.
std::string report_csv(const Json& report);

// DOT rendering of a ball's Cayley graph, one edge per positive generator.
std::string ball_dot(const CayleyBall& ball, const Group& g, std::size_t element_cap = 2000);

std::string rational_text(const Rational& r);

}  // namespace medianlab
