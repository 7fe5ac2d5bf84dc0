#include "tensordeg/census.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tensordeg/catalog.hpp"
#include "tensordeg/errors.hpp"
#include "tensordeg/tensor.hpp"
#include "tensordeg/text_io.hpp"

namespace tdeg {

namespace {

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.elements().begin(), a.elements().end(), b.elements().begin(),
                                      b.elements().end());
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

Check make_check(std::vector<Rational> terms, std::vector<std::string> ops, bool asserted) {
  Check c;
  c.terms = std::move(terms);
  c.ops = std::move(ops);
  const bool ok = c.relations_hold();
  if (asserted)
    c.status = ok ? Check::Status::pass : Check::Status::fail;
  else
    c.status = ok ? Check::Status::holds : Check::Status::violated;
  return c;
}

const char* status_word(Check::Status s) {
  switch (s) {
    case Check::Status::pass: return "pass";
    case Check::Status::fail: return "FAIL";
    case Check::Status::holds: return "holds";
    case Check::Status::violated: return "violated";
    case Check::Status::skipped: return "skip";
  }
  return "?";
}

std::string gens_str(const std::vector<Elem>& gens) {
  std::string out = "{";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(gens[i]);
  }
  return out + "}";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

CaseReport skeleton(const Subgroup& h, const Subgroup& k) {
  const FiniteGroup& g = h.parent();
  CaseReport r;
  r.group = g.label();
  r.group_order = g.order();
  r.h_gens = h.generators();
  r.k_gens = k.generators();
  r.h_order = h.size();
  r.k_order = k.size();
  r.hk_covers_g = product_covers(h, k);
  r.p = smallest_prime_divisor(g.order());
  return r;
}

struct Task {
  GroupPtr group;
  std::optional<Subgroup> h, k;  // empty: group skipped for order
};

}  // namespace

std::string Check::str() const {
  std::string out = status_word(status);
  if (terms.empty()) return out;
  out += ' ';
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ops[i - 1];
    out += terms[i].str();
  }
  return out;
}

bool Check::relations_hold() const {
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    const bool ok = ops[i] == "=" ? terms[i] == terms[i + 1] : terms[i] <= terms[i + 1];
    if (!ok) return false;
  }
  return true;
}

std::string CaseReport::lemma_str() const {
  if (lemma_status == Check::Status::skipped) return "skip";
  return std::string(status_word(lemma_status)) + " " + std::to_string(lemma_holding) + "/" +
         std::to_string(lemma_total);
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
  // Every normal subgroup is the join of the normal closures of the classes it contains.
  const Subgroup whole = Subgroup::whole(g);
  std::vector<Subgroup> found{Subgroup::trivial(g)};
  auto known = [&](const Subgroup& s) {
    return std::any_of(found.begin(), found.end(), [&](const Subgroup& f) { return f == s; });
  };
  for (const auto& cls : conjugacy_classes(whole, whole).classes) {
    Subgroup s = subgroup_closure(g, cls);
    if (!known(s)) found.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Elem> gens(found[i].elements().begin(), found[i].elements().end());
      gens.insert(gens.end(), found[j].elements().begin(), found[j].elements().end());
      Subgroup s = subgroup_closure(g, gens);
      if (!known(s)) found.push_back(std::move(s));
    }
  std::sort(found.begin(), found.end(), subgroup_less);
  return found;
}

std::vector<std::pair<Subgroup, Subgroup>> enumerate_normal_pairs(const GroupPtr& g, PairPolicy policy) {
  std::vector<std::pair<Subgroup, Subgroup>> pairs;
  if (policy == PairPolicy::diagonal) {
    pairs.emplace_back(Subgroup::whole(g), Subgroup::whole(g));
    return pairs;
  }
  const std::vector<Subgroup> normals = normal_subgroups(g);
  for (const Subgroup& h : normals)
    for (const Subgroup& k : normals)
      if (policy == PairPolicy::all_normal_pairs || product_covers(h, k)) pairs.emplace_back(h, k);
  return pairs;
}

namespace {

std::pair<Check, Check> degree_bounds(const DegreeBundle& b, std::size_t cent, std::size_t tensor_cent,
                                        std::size_t h_order, std::optional<std::uint64_t> p, bool asserted) {
  const Rational j(as_int(b.J_order));
  const Rational h(as_int(h_order));
  const Rational lower = b.d_comm / j + Rational(as_int(tensor_cent)) / h * (Rational(1) - Rational(1) / j);
  Check a = make_check({lower, b.d_tensor}, {"<="}, asserted);

  Check bound;
  if (p) {
    const Rational pr(static_cast<std::int64_t>(*p));
    const Rational gap = Rational(as_int(cent) - as_int(tensor_cent)) / h;
    const Rational upper = b.d_comm - (Rational(1) - Rational(1) / pr) * gap;
    bound = make_check({b.d_tensor, upper}, {"<="}, asserted);
  }
  return {a, bound};
}

}  // namespace

std::pair<Check, Check> check_degree_bounds(const DegreeBundle& b, std::size_t h_order, std::optional<std::uint64_t> p,
                                       bool asserted) {
  return degree_bounds(b, b.cent_order, b.tensor_cent_order, h_order, p, asserted);
}

std::pair<Check, Check> check_degree_bounds_transposed(const DegreeBundle& b, std::size_t h_order,
                                                  std::optional<std::uint64_t> p, bool asserted) {
  return degree_bounds(b, b.left_cent_order, b.left_tensor_cent_order, h_order, p, asserted);
}

CaseReport analyze_case(const Subgroup& h, const Subgroup& k, std::size_t max_cosets) {
  CaseReport r = skeleton(h, k);
  std::optional<ExteriorData> ed;
  try {
    ed.emplace(exterior_data(tensor_square(h, k, max_cosets)));
  } catch (const CosetLimitExceeded&) {
    r.status = "skipped: size";
    return r;
  }
  const DegreeBundle b = degree_bundle(*ed);
  r.bundle = b;

  std::tie(r.thm1a, r.thm1b) = check_degree_bounds(b, h.size(), r.p, r.hk_covers_g);
  std::tie(r.thm1a_transposed, r.thm1b_transposed) = check_degree_bounds_transposed(b, h.size(), r.p, false);

  r.j_trivial_equality = b.J_order == 1;
  const std::string link = r.j_trivial_equality ? "=" : "<=";
  r.thm2 = make_check({b.d_tensor, b.d_exterior, b.d_comm}, {link, link}, true);

  const Rational lower = b.d_comm / Rational(as_int(b.J_order));
  r.corollary = make_check({lower, b.d_tensor, b.d_comm}, {"<=", link}, r.hk_covers_g);

  const EmbeddingReport lemma = lemma_embedding_report(*ed);
  r.lemma_total = lemma.entries.size();
  r.lemma_holding = lemma.holding();
  if (lemma.hk_covers_g)
    r.lemma_status = lemma.ok() ? Check::Status::pass : Check::Status::fail;
  else
    r.lemma_status = r.lemma_holding == r.lemma_total ? Check::Status::holds : Check::Status::violated;

  const bool any_fail = r.thm1a.failed() || r.thm1b.failed() || r.thm2.failed() || r.corollary.failed() ||
                        r.lemma_status == Check::Status::fail;
  r.status = any_fail ? "FAIL" : "ok";
  return r;
}

CensusResult run_census(const CensusConfig& config) {
  std::vector<GroupPtr> groups;
  std::vector<std::string> exprs = config.groups;
  if (exprs.empty() && config.group_files.empty()) exprs = default_catalog();
  for (const std::string& expr : exprs) groups.push_back(catalog_group(expr));
  for (const auto& path : config.group_files) groups.push_back(parse_group_file(path));

  std::vector<Task> tasks;
  for (const GroupPtr& g : groups) {
    if (g->order() > config.max_order) {
      tasks.push_back({g, std::nullopt, std::nullopt});
      continue;
    }
    for (auto& [h, k] : enumerate_normal_pairs(g, config.policy)) tasks.push_back({g, h, k});
  }

  CensusResult result;
  result.rows.resize(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) try {
      const Task& t = tasks[i];
      if (!t.h) {
        CaseReport r;
        r.group = t.group->label();
        r.group_order = t.group->order();
        r.p = smallest_prime_divisor(r.group_order);
        r.status = "skipped: order";
        result.rows[i] = std::move(r);
      } else {
        result.rows[i] = analyze_case(*t.h, *t.k, config.max_cosets);
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(config.jobs, 1, std::max<std::size_t>(tasks.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  CensusSummary& s = result.summary;
  for (const CaseReport& r : result.rows) {
    ++s.rows;
    if (r.status == "ok") ++s.ok;
    if (r.failed()) ++s.failed;
    if (r.status.starts_with("skipped")) ++s.skipped;
    for (const Check* c : {&r.thm1a, &r.thm1b, &r.thm2, &r.corollary}) {
      s.asserted_checks += c->asserted();
      s.unasserted_violations += c->status == Check::Status::violated;
    }
    if (r.lemma_status == Check::Status::pass || r.lemma_status == Check::Status::fail) ++s.asserted_checks;
    if (r.lemma_status == Check::Status::violated) ++s.unasserted_violations;
    s.j_trivial_rows += r.j_trivial_equality;
    for (const Check* c : {&r.thm1a_transposed, &r.thm1b_transposed})
      s.transposed_violations += c->status == Check::Status::violated;
  }
  result.exit_status = s.failed ? 1 : 0;

  if (config.output) {
    std::ofstream out(*config.output, std::ios::binary);
    if (!out) throw Error("cannot open output file " + config.output->string());
    out << (config.format == OutputFormat::csv ? format_csv(result.rows) : format_json(result));
    if (!out) throw Error("failed writing " + config.output->string());
  }
  return result;
}

std::string format_csv(const std::vector<CaseReport>& rows) {
  std::ostringstream os;
  os << "group,|G|,H,K,hk=G,|J|,|M|,k_K(H),|C_K(H)|,|Ctensor|,|Cwedge|,d,d_tensor,d_wedge,"
        "thm1a,thm1b,thm2,corollary,lemma,status\n";
  for (const CaseReport& r : rows) {
    os << csv_field(r.group) << ',' << r.group_order << ',';
    if (r.status == "skipped: order") {
      os << ",,,,,,,,,,,,skip,skip,skip,skip,skip," << r.status << '\n';
      continue;
    }
    os << gens_str(r.h_gens) << ',' << gens_str(r.k_gens) << ',' << (r.hk_covers_g ? "yes" : "no") << ',';
    if (r.bundle) {
      const DegreeBundle& b = *r.bundle;
      os << b.J_order << ',' << b.M_order << ',' << b.k_classes << ',' << b.cent_order << ','
         << b.tensor_cent_order << ',' << b.exterior_cent_order << ',' << b.d_comm << ',' << b.d_tensor << ','
         << b.d_exterior << ',';
    } else {
      os << ",,,,,,,,,";
    }
    os << r.thm1a.str() << ',' << r.thm1b.str() << ',' << r.thm2.str() << ',' << r.corollary.str() << ','
       << r.lemma_str() << ',' << r.status << '\n';
  }
  return os.str();
}

namespace {

nlohmann::ordered_json rational_json(const Rational& q) {
  return nlohmann::ordered_json{{"num", q.num()}, {"den", q.den()}};
}

nlohmann::ordered_json check_json(const Check& c) {
  nlohmann::ordered_json j;
  j["status"] = status_word(c.status);
  j["ops"] = c.ops;
  j["terms"] = nlohmann::ordered_json::array();
  for (const Rational& t : c.terms) j["terms"].push_back(rational_json(t));
  return j;
}

}  // namespace

std::string format_json(const CensusResult& result) {
  using nlohmann::ordered_json;
  ordered_json rows = ordered_json::array();
  for (const CaseReport& r : result.rows) {
    ordered_json row;
    row["group"] = r.group;
    row["order"] = r.group_order;
    row["H"] = r.h_gens;
    row["K"] = r.k_gens;
    row["H_order"] = r.h_order;
    row["K_order"] = r.k_order;
    row["hk_covers_g"] = r.hk_covers_g;
    row["p"] = r.p ? ordered_json(*r.p) : ordered_json(nullptr);
    if (r.bundle) {
      const DegreeBundle& b = *r.bundle;
      row["J_order"] = b.J_order;
      row["M_order"] = b.M_order;
      row["k_classes"] = b.k_classes;
      row["C_K_H"] = b.cent_order;
      row["C_tensor"] = b.tensor_cent_order;
      row["C_wedge"] = b.exterior_cent_order;
      row["d"] = rational_json(b.d_comm);
      row["d_tensor"] = rational_json(b.d_tensor);
      row["d_wedge"] = rational_json(b.d_exterior);
    }
    row["thm1a"] = check_json(r.thm1a);
    row["thm1b"] = check_json(r.thm1b);
    row["thm1a_transposed"] = check_json(r.thm1a_transposed);
    row["thm1b_transposed"] = check_json(r.thm1b_transposed);
    row["thm2"] = check_json(r.thm2);
    row["corollary"] = check_json(r.corollary);
    row["lemma"] = {{"status", status_word(r.lemma_status)},
                    {"holding", r.lemma_holding},
                    {"total", r.lemma_total}};
    row["status"] = r.status;
    rows.push_back(std::move(row));
  }
  const CensusSummary& s = result.summary;
  ordered_json doc;
  doc["rows"] = std::move(rows);
  doc["summary"] = {{"rows", s.rows},
                    {"ok", s.ok},
                    {"failed", s.failed},
                    {"skipped", s.skipped},
                    {"asserted_checks", s.asserted_checks},
                    {"j_trivial_rows", s.j_trivial_rows},
                    {"unasserted_violations", s.unasserted_violations},
                    {"transposed_violations", s.transposed_violations}};
  return doc.dump(2) + "\n";
}

std::string format_summary(const CensusSummary& s) {
  std::ostringstream os;
  os << "rows: " << s.rows << "  ok: " << s.ok << "  failed: " << s.failed << "  skipped: " << s.skipped << '\n'
     << "asserted checks: " << s.asserted_checks << '\n'
     << "rows with |J| = 1 (equality d_tensor = d_wedge = d checked): " << s.j_trivial_rows << '\n'
     << "unasserted findings (hypothesis H K = G absent, inequality violated): " << s.unasserted_violations << '\n'
     << "bounds (a), (b) with C_H(K), C(x)_H(K) in place of C_K(H), C(x)_K(H), violations: " << s.transposed_violations
     << '\n';
  return os.str();
}

PairPolicy parse_pair_policy(const std::string& s) {
  if (s == "diagonal") return PairPolicy::diagonal;
  if (s == "hk" || s == "hk_covering") return PairPolicy::hk_covering;
  if (s == "all" || s == "all_normal_pairs") return PairPolicy::all_normal_pairs;
  throw Error("unknown pair policy '" + s + "'");
}

OutputFormat parse_output_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw Error("unknown output format '" + s + "'");
}

}  // namespace tdeg
