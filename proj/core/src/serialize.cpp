#include "biq/serialize.hpp"

#include <nlohmann/json.hpp>

namespace biq {

namespace {

nlohmann::json group_json(const GradedAlgebraPresentation& pres) {
  return {{"family", family_name(pres.group.family)},
          {"n", pres.group.n},
          {"name", pres.group.name()},
          {"rank", pres.group.rank()}};
}

nlohmann::json torus_json(const GradedAlgebraPresentation& pres) {
  return {{"name", pres.torus.name(pres.group)}};
}

}  // namespace

std::string presentation_json(const GradedAlgebraPresentation& pres) {
  nlohmann::json j;
  j["group"] = group_json(pres);
  j["torus"] = torus_json(pres);
  j["variables"] = nlohmann::json::array();
  for (std::size_t i = 0; i < pres.context->size(); ++i) {
    j["variables"].push_back({{"name", pres.context->name(i)}, {"degree", pres.context->degree(i)}});
  }
  j["relations"] = nlohmann::json::array();
  for (const auto& r : pres.relations) j["relations"].push_back(r.to_string());
  j["m"] = pres.m;
  return j.dump(2) + "\n";
}

long long euler_characteristic(const std::vector<std::size_t>& betti) {
  long long chi = 0;
  for (std::size_t d = 0; d < betti.size(); ++d) {
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(betti[d]);
  }
  return chi;
}

std::string betti_json(const GradedAlgebraPresentation& pres, const std::vector<std::size_t>& betti) {
  nlohmann::json j;
  j["group"] = group_json(pres);
  j["torus"] = torus_json(pres);
  j["betti"] = betti;
  j["euler"] = euler_characteristic(betti);
  std::size_t total = 0;
  for (auto b : betti) total += b;
  j["total"] = total;
  return j.dump(2) + "\n";
}

std::string verdict_json(const HlpVerdict& verdict, const VariableContext& ctx,
                         const std::vector<std::size_t>& betti, std::int64_t runtime_ms) {
  nlohmann::json j;
  j["passes"] = verdict.passes;
  j["failing_k"] = verdict.failing_k ? nlohmann::json(*verdict.failing_k) : nlohmann::json(nullptr);
  j["witness"] = nlohmann::json::array();
  for (const auto& m : verdict.witness) j["witness"].push_back(to_string(m, ctx));
  j["betti"] = betti;
  j["euler"] = euler_characteristic(betti);
  j["runtime_ms"] = runtime_ms;
  return j.dump(2) + "\n";
}

}  // namespace biq
