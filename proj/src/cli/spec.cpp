#include <fstream>
#include <sstream>

#include "coulomb/cli.hpp"

namespace coulomb::cli {

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const json& require(const json& object, const std::string& key, const std::string& path) {
  if (!object.is_object()) throw SpecError(path, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) throw SpecError(path, "missing field \"" + key + "\"");
  return *it;
}

std::int64_t as_int(const json& value, const std::string& path, std::int64_t min_value) {
  if (!value.is_number_integer()) throw SpecError(path, "expected an integer");
  const auto v = value.get<std::int64_t>();
  if (v < min_value) throw SpecError(path, "expected an integer >= " + std::to_string(min_value));
  return v;
}

std::vector<std::int64_t> as_int_vector(const json& value, const std::string& path, std::size_t length) {
  if (!value.is_array()) throw SpecError(path, "expected an array of integers");
  if (value.size() != length) {
    throw SpecError(path, "expected " + std::to_string(length) + " entries, got " + std::to_string(value.size()));
  }
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(as_int(value[i], child(path, i), std::numeric_limits<std::int64_t>::min()));
  }
  return out;
}

lie::RootDatum parse_factor(const json& f, const std::string& path) {
  if (!f.is_object()) throw SpecError(path, "expected a factor object");
  try {
    if (f.contains("preset")) {
      const json& name = f["preset"];
      if (!name.is_string()) throw SpecError(child(path, "preset"), "expected a preset name");
      auto preset = lie::parse_preset(name.get<std::string>());
      if (!preset) {
        throw SpecError(child(path, "preset"),
                        "unknown preset \"" + name.get<std::string>() + "\" (SL, PGL, Sp, SO, GL, Torus)");
      }
      const auto n = as_int(require(f, "n", path), child(path, "n"), 0);
      return lie::make_root_datum(*preset, static_cast<int>(n));
    }
    const auto rank = static_cast<std::size_t>(as_int(require(f, "rank", path), child(path, "rank"), 0));
    const json& roots = require(f, "simple_roots", path);
    const json& coroots = require(f, "simple_coroots", path);
    if (!roots.is_array()) throw SpecError(child(path, "simple_roots"), "expected an array");
    if (!coroots.is_array()) throw SpecError(child(path, "simple_coroots"), "expected an array");
    std::vector<lie::Weight> alpha;
    std::vector<lie::Coweight> alpha_vee;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      alpha.push_back(as_int_vector(roots[i], child(child(path, "simple_roots"), i), rank));
    }
    for (std::size_t i = 0; i < coroots.size(); ++i) {
      alpha_vee.push_back(as_int_vector(coroots[i], child(child(path, "simple_coroots"), i), rank));
    }
    std::string name = "G";
    if (f.contains("name")) {
      if (!f["name"].is_string()) throw SpecError(child(path, "name"), "expected a string");
      name = f["name"].get<std::string>();
    }
    return lie::RootDatum::from_simple(name, rank, std::move(alpha), std::move(alpha_vee));
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception& e) {
    throw SpecError(path, e.what());
  }
}

lie::RootDatum parse_group(const json& g, const std::string& path) {
  if (!g.is_object()) throw SpecError(path, "expected an object with \"factors\"");
  std::optional<lie::RootDatum> datum;
  auto append = [&](lie::RootDatum next) { datum = datum ? lie::product(*datum, next) : std::move(next); };
  if (g.contains("factors")) {
    const json& factors = g["factors"];
    if (!factors.is_array()) throw SpecError(child(path, "factors"), "expected an array");
    for (std::size_t i = 0; i < factors.size(); ++i) append(parse_factor(factors[i], child(child(path, "factors"), i)));
  }
  if (g.contains("torus_rank")) {
    const auto t = as_int(g["torus_rank"], child(path, "torus_rank"), 0);
    if (t > 0) append(lie::make_root_datum(lie::Preset::Torus, static_cast<int>(t)));
  }
  if (!datum) throw SpecError(path, "the group has no factors and no torus");
  return *datum;
}

class ExprParser {
 public:
  explicit ExprParser(const lie::RootDatum& d) : d_(d) {}

  lie::WeightRep parse(const json& e, const std::string& path) const {
    if (!e.is_array() || e.empty() || !e[0].is_string()) {
      throw SpecError(path, "expected a builder expression [op, args...]");
    }
    const auto op = e[0].get<std::string>();
    const std::size_t argc = e.size() - 1;
    auto arity = [&](std::size_t lo, std::size_t hi) {
      if (argc < lo || argc > hi) {
        throw SpecError(path, "\"" + op + "\" takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi)) +
                                  " argument(s), got " + std::to_string(argc));
      }
    };
    try {
      if (op == "defining") {
        arity(0, 1);
        return lie::defining_rep(d_, argc == 1 ? factor(e[1], child(path, 1)) : 0);
      }
      if (op == "sl2_irrep") {
        arity(1, 2);
        const auto k = as_int(e[1], child(path, 1), 0);
        return lie::sl2_irrep(d_, static_cast<int>(k), argc == 2 ? factor(e[2], child(path, 2)) : 0);
      }
      if (op == "dual") {
        arity(1, 1);
        return lie::dual(parse(e[1], child(path, 1)));
      }
      if (op == "cotangent") {
        arity(1, 1);
        return lie::cotangent(parse(e[1], child(path, 1)));
      }
      if (op == "copies") {
        arity(2, 2);
        const auto m = as_int(e[1], child(path, 1), 0);
        const auto base = parse(e[2], child(path, 2));
        lie::WeightRep out(d_.rank());
        for (const auto& [chi, mult] : base.entries()) {
          if (m > 0) out.add(chi, mult * m);
        }
        return out;
      }
      if (op == "direct_sum" || op == "tensor") {
        arity(1, std::numeric_limits<std::size_t>::max());
        lie::WeightRep acc = parse(e[1], child(path, 1));
        for (std::size_t i = 2; i < e.size(); ++i) {
          auto next = parse(e[i], child(path, i));
          acc = op == "tensor" ? lie::tensor(acc, next) : lie::direct_sum(acc, next);
        }
        return acc;
      }
      if (op == "weights") {
        lie::WeightRep out(d_.rank());
        for (std::size_t i = 1; i < e.size(); ++i) {
          const std::string p = child(path, i);
          if (!e[i].is_array() || e[i].size() != 2) throw SpecError(p, "expected [weight, multiplicity]");
          auto chi = as_int_vector(e[i][0], child(p, 0), d_.rank());
          out.add(chi, as_int(e[i][1], child(p, 1), 1));
        }
        return out;
      }
    } catch (const SpecError&) {
      throw;
    } catch (const std::exception& ex) {
      throw SpecError(path, ex.what());
    }
    throw SpecError(child(path, 0), "unknown builder \"" + op +
                                        "\" (defining, sl2_irrep, dual, cotangent, copies, direct_sum, tensor, weights)");
  }

 private:
  std::size_t factor(const json& v, const std::string& path) const {
    const auto f = static_cast<std::size_t>(as_int(v, path, 0));
    if (f >= d_.factors().size()) {
      throw SpecError(path, "factor index " + std::to_string(f) + " out of range (the group has " +
                                std::to_string(d_.factors().size()) + " factors)");
    }
    return f;
  }

  const lie::RootDatum& d_;
};

}  // namespace

RepSpec parse_rep_spec(const json& document) {
  if (!document.is_object()) throw SpecError("", "expected a JSON object");
  const json& schema = require(document, "schema", "");
  if (!schema.is_string() || schema.get<std::string>() != kSpecSchema) {
    throw SpecError("/schema", std::string("unsupported schema (expected \"") + kSpecSchema + "\")");
  }
  lie::RootDatum datum = parse_group(require(document, "group", ""), "/group");
  const json& rep = require(document, "representation", "");
  if (!rep.is_array()) throw SpecError("/representation", "expected an array of builder expressions");
  ExprParser parser(datum);
  lie::WeightRep total(datum.rank());
  for (std::size_t i = 0; i < rep.size(); ++i) {
    total = lie::direct_sum(total, parser.parse(rep[i], child(std::string("/representation"), i)));
  }
  return RepSpec{std::move(datum), std::move(total), document};
}

RepSpec load_rep_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  json document;
  try {
    document = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  return parse_rep_spec(document);
}

}  // namespace coulomb::cli
