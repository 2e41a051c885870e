#include "milnor/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <json.hpp>

#include "milnor/errors.hpp"
#include "milnor/generator.hpp"
#include "milnor/infection.hpp"
#include "milnor/metabolizer.hpp"
#include "milnor/nilpotent.hpp"
#include "milnor/realization.hpp"
#include "milnor/seifert.hpp"

namespace milnor::cli {
namespace {

using json = nlohmann::ordered_json;

// Integers above 2^53 travel as decimal strings.
json to_json(const Integer& v) {
  if (fits_json_number(v)) return json(static_cast<std::int64_t>(v.get_si()));
  return json(to_string(v));
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json columns_to_json(const Matrix& columns) { return json{{"columns", to_json(columns.transpose())}}; }

json seifert_to_json(const SeifertMatrix& m) {
  return json{{"genus", m.genus()}, {"ordering", std::string(to_string(m.ordering()))}, {"entries", to_json(m.entries())}};
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw InputError("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

Integer integer_from(const json& j, const std::string& what) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                  : Integer(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InputError(what + " must be an integer (number or decimal string)");
}

int small_int_from(const json& j, const std::string& what) {
  const Integer v = integer_from(j, what);
  if (!v.fits_sint_p()) throw InputError(what + " is out of range");
  return static_cast<int>(v.get_si());
}

Matrix matrix_from(const json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of rows");
  std::vector<Vector> rows;
  for (const json& row : j) {
    if (!row.is_array()) throw InputError(what + " rows must be arrays");
    Vector v;
    for (const json& x : row) v.push_back(integer_from(x, what + " entry"));
    rows.push_back(std::move(v));
  }
  if (rows.empty()) throw InputError(what + " is empty");
  return Matrix::from_rows(rows);
}

Square3 square3_from(const json& j, const std::string& what) {
  const Matrix m = matrix_from(j, what);
  if (m.rows() != 3 || m.cols() != 3) throw InputError(what + " must be 3x3");
  Square3 out;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) out[i][k] = m(i, k);
  return out;
}

SeifertMatrix seifert_from(const json& j) {
  const Matrix entries = matrix_from(field(j, "entries"), "entries");
  const BasisOrdering ordering = parse_ordering(field(j, "ordering").get<std::string>());
  const int genus = small_int_from(field(j, "genus"), "genus");
  if (genus < 1 || entries.rows() != static_cast<std::size_t>(2 * genus)) {
    throw InputError("genus " + std::to_string(genus) + " does not match a " + std::to_string(entries.rows()) +
                     "-row matrix");
  }
  return validate(entries, ordering);
}

MetabolizerBasis metabolizer_from(const json& j) {
  return MetabolizerBasis(matrix_from(field(j, "columns"), "columns").transpose());
}

FreeWord word_from(const json& obj, const char* key, int rank) {
  const json& w = field(obj, key);
  if (!w.is_string()) throw InputError(std::string(key) + " must be a string");
  return parse_word(w.get<std::string>(), rank);
}

int rank_from(const json& in) {
  if (!in.is_object()) throw InputError("expected a JSON object");
  return in.contains("rank") ? small_int_from(in["rank"], "rank") : 3;
}

json class_to_json(const CommutatorClass& c) {
  return json::array({to_json(c.coords[0]), to_json(c.coords[1]), to_json(c.coords[2])});
}

std::uint64_t check_seed(const RunConfig& config) { return config.seed.value_or(1); }

json cmd_mu(const RunConfig& config, const json& in) {
  const int rank = rank_from(in);
  if (rank != 3) throw InputError("mu needs rank 3");
  const int cap = in.contains("degree_cap") ? small_int_from(in["degree_cap"], "degree_cap") : config.degree_cap;
  if (cap < 2) throw InputError("degree_cap must be >= 2");
  const FreeWord w = word_from(in, "longitude3", rank);
  json out{{"mu123", to_json(mu123(w, cap))}};
  if (config.show_series) out["series"] = phi(w, cap).to_string();
  return out;
}

json cmd_depth(const RunConfig& config, const json& in) {
  const int rank = rank_from(in);
  const int kmax = in.contains("kmax") ? small_int_from(in["kmax"], "kmax") : config.degree_cap;
  const FreeWord w = word_from(in, "word", rank);
  return json{{"depth", lcs_depth(w, kmax)}, {"kmax", kmax}};
}

json cmd_class(const RunConfig&, const json& in) {
  const int rank = rank_from(in);
  CommutatorClass c;
  if (in.contains("w1") || in.contains("w2")) {
    c = commutator_class(word_from(in, "w1", rank), word_from(in, "w2", rank));
  } else {
    c = class_of(word_from(in, "word", rank));
  }
  return json{{"class", class_to_json(c)}, {"mu123", to_json(mu_from_class(c))}};
}

json generator_to_json(const GeneratorResult& r) {
  return json{{"generator", to_json(r.generator)}, {"signed", to_json(r.signed_value)}, {"B", to_json(r.b)}};
}

json cmd_generator(const RunConfig& config, const json& in) {
  if (in.is_object() && in.contains("B")) {
    const Matrix b = matrix_from(in["B"], "B");
    return generator_to_json(generator_from_b(b));
  }
  const SeifertMatrix m = seifert_from(field(in, "matrix"));
  const MetabolizerBasis v = metabolizer_from(field(in, "metabolizer"));
  const GeneratorResult r = generator_for_metabolizer(m, v);
  const std::uint64_t seed = check_seed(config);
  const GeneratorResult again = generator_for_metabolizer(m, v, seed);
  if (again.signed_value != r.signed_value) throw DefectError("generator depends on the symplectic completion");
  json out = generator_to_json(r);
  out["meta"] = json{{"seed", seed}, {"self_check", "completion_invariance"}};
  return out;
}

json cmd_metabolizer(const RunConfig& config, const json& in) {
  const SeifertMatrix m = seifert_from(field(in, "matrix"));
  const MetabolizerBasis v = metabolizer_from(field(in, "metabolizer"));
  const bool metabolic = is_metabolizer(m, v);
  json out{{"is_metabolizer", metabolic}, {"is_primitive", is_primitive(v)}};
  if (metabolic) {
    const std::uint64_t seed = check_seed(config);
    const Matrix t = symplectic_complete(m, v);
    symplectic_complete(m, v, seed);  // self-verifying; throws on failure
    out["completion"] = to_json(t);
    out["meta"] = json{{"seed", seed}, {"self_check", "symplectic_postcondition"}};
  }
  return out;
}

json cmd_enumerate(const RunConfig&, const json& in) {
  const SeifertMatrix m = seifert_from(field(in, "matrix"));
  const int bound = small_int_from(field(in, "bound"), "bound");
  const auto found = enumerate_metabolizers(m, bound);
  json list = json::array();
  for (const MetabolizerBasis& v : found) list.push_back(columns_to_json(v.columns()));
  return json{{"count", found.size()}, {"metabolizers", std::move(list)}};
}

json cmd_infect(const RunConfig&, const json& in) {
  if (!in.is_object()) throw InputError("expected a JSON object");
  const Integer mu_j = in.contains("mu_J") ? integer_from(in["mu_J"], "mu_J") : kBorromeanMu;
  const Integer mu_l = integer_from(field(in, "mu_L"), "mu_L");
  if (in.contains("alpha") || in.contains("beta")) {
    const BandSumCounts counts(square3_from(field(in, "alpha"), "alpha"), square3_from(field(in, "beta"), "beta"));
    const Integer expanded = band_sum_expansion(mu_j, counts, mu_l);
    const Integer direct = infected_mu(mu_j, counts.profile(), mu_l);
    if (expanded != direct) throw DefectError("band-sum expansion disagrees with the determinant formula");
    return json{{"mu", to_json(direct)}, {"triple_det", to_json(triple_det(counts.profile()))}};
  }
  const IntersectionProfile profile{square3_from(field(in, "N"), "N")};
  return json{{"mu", to_json(infected_mu(mu_j, profile, mu_l))}, {"triple_det", to_json(triple_det(profile))}};
}

json cmd_genus_one(const RunConfig&, const json& in) {
  if (in.is_object() && in.contains("summands")) {
    const json& s = in["summands"];
    if (!s.is_array() || s.size() != 3) throw InputError("summands must list exactly three {d, e} objects");
    std::array<std::pair<Integer, Integer>, 3> summands;
    for (std::size_t i = 0; i < 3; ++i) {
      summands[i] = {integer_from(field(s[i], "d"), "d"), integer_from(field(s[i], "e"), "e")};
    }
    const ConnectedSumGenerator r = connected_sum_generator(summands);
    json e = json::array();
    for (const Integer& x : r.normalized_e) e.push_back(to_json(x));
    json out = generator_to_json(r.result);
    out["normalized_e"] = std::move(e);
    out["matrix"] = seifert_to_json(r.matrix);
    return out;
  }
  const Integer d = integer_from(field(in, "d"), "d");
  const Integer e = integer_from(field(in, "e"), "e");
  const GenusOneNormalization r = genus_one_normalize(d, e);
  return json{{"n", to_json(r.n)},
              {"x", to_json(r.x)},
              {"y", to_json(r.y)},
              {"z", to_json(r.z)},
              {"w", to_json(r.w)},
              {"identities", json::array({to_json(r.identities[0]), to_json(r.identities[1]), to_json(r.identities[2])})},
              {"new_matrix", seifert_to_json(r.new_matrix)},
              {"normalized_e", to_json(normalize_e(e))}};
}

json cmd_ledger(const RunConfig&, const json& in) {
  const json& p = field(in, "params");
  const auto get = [&](const char* k) { return integer_from(field(p, k), k); };
  const GenusThreeParams params{get("a"), get("b"), get("c"), get("x1"), get("x2"),
                                get("y1"), get("y2"), get("z1"), get("z2")};
  const Integer n_big = integer_from(field(in, "n"), "n");
  if (!n_big.fits_slong_p()) throw InputError("n out of range");
  const std::int64_t n = n_big.get_si();
  const Ledger l = ledger(params, n);
  json entries = json::array();
  for (const PushoffEntry& e : pushoff_ledger_entries(params, n)) {
    entries.push_back(json{{"name", e.name}, {"value", to_json(e.value)}});
  }
  return json{{"band1_term", to_json(l.band1_term)},
              {"band3_term", to_json(l.band3_term)},
              {"band5_term", to_json(l.band5_term)},
              {"residual_term", to_json(l.residual_term)},
              {"total", to_json(l.total)},
              {"n", to_json(l.n)},
              {"description",
               {{"parallel_copies", to_json(l.description.parallel_copies)},
                {"wrap_count", l.description.wrap_count},
                {"inner_alteration_count", l.description.inner_alteration_count},
                {"roles_swapped", l.description.roles_swapped}}},
              {"pushoff_entries", std::move(entries)}};
}

using Handler = std::function<json(const RunConfig&, const json&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"mu", cmd_mu},           {"depth", cmd_depth},         {"class", cmd_class},
      {"generator", cmd_generator}, {"metabolizer", cmd_metabolizer}, {"enumerate", cmd_enumerate},
      {"infect", cmd_infect},   {"genus-one", cmd_genus_one}, {"ledger", cmd_ledger},
  };
  return table;
}

std::string render_text(const json& out) {
  std::string text;
  for (const auto& [key, value] : out.items()) {
    text += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  }
  return text;
}

RunResult failure(int code, const char* kind, const std::string& detail) {
  return {code, json{{"error", kind}, {"detail", detail}}.dump() + "\n"};
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, h] : handlers()) n.push_back(name);
    return n;
  }();
  return names;
}

std::optional<int> degree_cap_from_env(const char* value) {
  if (value == nullptr || *value == '\0') return std::nullopt;
  const Integer cap = parse_integer(value);
  if (cap < 2 || !cap.fits_sint_p()) throw InputError(std::string(kDegreeCapEnv) + " must be an integer >= 2");
  return static_cast<int>(cap.get_si());
}

RunResult error_result(const std::exception& e) {
  if (dynamic_cast<const json::exception*>(&e) || dynamic_cast<const InputError*>(&e))
    return failure(kExitBadInput, "bad_input", e.what());
  if (dynamic_cast<const PreconditionError*>(&e)) return failure(kExitPrecondition, "precondition", e.what());
  return failure(kExitInternal, "internal", e.what());
}

RunResult run(const RunConfig& config, std::string_view input) {
  const auto it = handlers().find(config.subcommand);
  if (it == handlers().end()) return failure(kExitBadInput, "bad_input", "unknown subcommand '" + config.subcommand + "'");
  try {
    const json in = json::parse(input.begin(), input.end());
    const json out = it->second(config, in);
    return {kExitOk, config.output == OutputFormat::json ? out.dump() + "\n" : render_text(out)};
  } catch (const std::exception& e) {
    return error_result(e);
  }
}

}  // namespace milnor::cli
