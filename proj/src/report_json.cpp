#include "cclab/report_json.hpp"

namespace cclab {

json to_json(const ExecResult& r) {
  return json{{"output", r.output.str()},
              {"steps", r.steps},
              {"halt_reason", halt_reason_name(r.halt_reason)}};
}

json to_json(const ComplexityRecord& r) {
  json j{{"x", r.x.str()},
         {"value", r.value},
         {"witness", r.witness.str()},
         {"exceeds_budget", r.exceeds_budget}};
  j["step_budget"] = r.step_budget ? json(*r.step_budget) : json(nullptr);
  return j;
}

json to_json(const BBRecord& r) {
  return json{{"m", r.m}, {"bb", r.bb}, {"p_m", r.p_m.str()}};
}

json to_json(const ASet& a) {
  json members = json::array();
  for (const BitString& y : a.members) members.push_back(y.str());
  return json{{"s", a.s}, {"len", a.len}, {"count", a.members.size()}, {"members", members}};
}

json to_json(const IncompressibleFraction& f) {
  return json{{"count", f.count},
              {"length", f.length},
              {"fraction", f.str()},
              {"value", f.value()}};
}

json to_json(const Compressor& c) {
  json j{{"name", c.name},
         {"declared_length", c.declared_length},
         {"program_backed", c.program_backed()}};
  j["backing_program"] = c.backing_program ? json(c.backing_program->str()) : json(nullptr);
  return j;
}

json to_json(const Thm1Report& r, bool include_per_x) {
  json j{{"m", r.m},
         {"n_max", r.n_max},
         {"pass", r.pass},
         {"case1_count", r.case1_count},
         {"case2_count", r.case2_count},
         {"corollary_slack", r.corollary_slack},
         {"k_print", r.k_print},
         {"declared_length", r.declared_length},
         {"k_min_statement", r.k_min_statement}};
  if (include_per_x) {
    json entries = json::array();
    for (const Thm1Entry& e : r.per_x) {
      entries.push_back(json{{"x", e.x.str()},
                             {"c", e.c},
                             {"q_len", e.q_len},
                             {"case", e.case_taken},
                             {"ok", e.ok}});
    }
    j["per_x"] = std::move(entries);
  }
  return j;
}

json to_json(const Thm2Report& r) {
  json violations = json::array();
  for (const Thm2Violation& v : r.violations) {
    violations.push_back(json{{"q", v.q.str()},
                              {"q_out_len", v.out_len},
                              {"decomp_steps", v.decomp_steps}});
  }
  return json{{"m", r.m},
              {"n", r.n},
              {"q_len_max", r.q_len_max},
              {"t", r.t},
              {"x_adv", r.x_adv.str()},
              {"c_x_adv", r.c_x_adv},
              {"cf_count", r.cf_count},
              {"violations", violations},
              {"mechanism_pass", r.mechanism_pass},
              {"degenerate", r.degenerate},
              {"k_min_item2", r.k_min_item2},
              {"k_min_item3", r.k_min_item3},
              {"k_min_item4", r.k_min_item4},
              {"k_min_items", r.k_min_items},
              {"pass", r.pass}};
}

json to_json(const MeasuredConstants& k) {
  return json{{"k_print", k.k_print},
              {"k_driver", k.k_driver},
              {"k_min_thm1", k.k_min_thm1},
              {"k_min_thm2", k.k_min_thm2},
              {"thm1_witness", {{"m", k.thm1_witness_m}, {"n", k.thm1_witness_n}}},
              {"thm2_witness", {{"m", k.thm2_witness_m}, {"n", k.thm2_witness_n}}}};
}

json to_json(const ExtractRandomResult& r) {
  return json{{"z", r.z.str()},
              {"t_prime", r.t_prime},
              {"bb_m", r.bb_m},
              {"contract_applies", r.contract_applies}};
}

json to_json(const TimeBound& t) {
  return json{{"a", t.a}, {"b", t.b}, {"c", t.c}};
}

namespace {

json failures_to_json(const std::vector<FgFailure>& fails) {
  json arr = json::array();
  for (const FgFailure& f : fails) {
    arr.push_back(json{{"x", f.x.str()}, {"steps", f.steps}, {"bound", f.bound}});
  }
  return arr;
}

}  // namespace

json to_json(const FgReport& r) {
  return json{{"compressor", r.compressor},
              {"f", to_json(r.f)},
              {"g", to_json(r.g)},
              {"lengths", r.lengths},
              {"strings_checked", r.strings_checked},
              {"g_pass", r.g_pass},
              {"g_fail_count", r.g_fail_count},
              {"g_failures", failures_to_json(r.g_failures)},
              {"f_modeled", r.f_modeled},
              {"f_pass", r.f_pass},
              {"f_fail_count", r.f_fail_count},
              {"f_failures", failures_to_json(r.f_failures)}};
}

json to_json(const DistinguisherReport& r) {
  return json{{"compressor", r.compressor},
              {"seed_len", r.seed_len},
              {"out_len", r.out_len},
              {"trials", r.trials},
              {"rng_seed", r.rng_seed},
              {"rng_algorithm", r.rng_algorithm},
              {"accept_count_uniform", r.accept_count_uniform},
              {"accept_count_prg", r.accept_count_prg},
              {"accept_rate_uniform", r.accept_rate_uniform},
              {"accept_rate_prg", r.accept_rate_prg},
              {"advantage", r.advantage}};
}

}  // namespace cclab
