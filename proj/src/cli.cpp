#include "gkdim/cli.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gkdim/errors.hpp"
#include "gkdim/gk.hpp"
#include "gkdim/hecke.hpp"
#include "gkdim/hermitian.hpp"
#include "gkdim/json_io.hpp"
#include "gkdim/permutation.hpp"

namespace gkdim::cli {

namespace {

using nlohmann::json;

enum class Format { Json, Pretty };

struct Options {
  std::string weight;
  std::string pq;
  std::string z;
  std::string z_range;
  std::string output = "json";
  std::size_t rank = 4;
  bool batch = false;
};

// Thrown for malformed flag values that CLI11 itself accepts.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<std::string, std::string> split_pair(const std::string& text, const char* flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw UsageError(std::string(flag) + " expects two comma-separated values, got '" + text + "'");
  }
  return {text.substr(0, comma), text.substr(comma + 1)};
}

long parse_int(const std::string& text, const char* flag) {
  const Rational r = Rational::parse(text);
  if (!r.is_integer()) throw UsageError(std::string(flag) + " expects integers, got '" + text + "'");
  return static_cast<long>(r.to_int());
}

PQContext parse_pq(const std::string& text) {
  const auto [p, q] = split_pair(text, "--pq");
  return PQContext(static_cast<int>(parse_int(p, "--pq")), static_cast<int>(parse_int(q, "--pq")));
}

json error_object(const std::string& kind, const std::string& message,
                  const std::string& precondition = {},
                  std::optional<std::pair<std::size_t, std::size_t>> indices = std::nullopt) {
  json e = {{"error", kind}, {"message", message}};
  if (!precondition.empty()) e["precondition"] = precondition;
  if (indices) e["indices"] = {indices->first, indices->second};
  return e;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// "key: value" lines in the given order; arrays are space-separated.
void render_fields(const json& obj, std::initializer_list<const char*> keys, std::ostream& out) {
  for (const char* key : keys) {
    if (!obj.contains(key)) continue;
    const json& v = obj.at(key);
    out << key << ':';
    if (v.is_array()) {
      for (const auto& x : v) out << ' ' << scalar_text(x);
    } else {
      out << ' ' << scalar_text(v);
    }
    out << '\n';
  }
}

void render_tableau(const json& rows, std::ostream& out) {
  for (const auto& row : rows) {
    bool first = true;
    for (const auto& x : row) {
      out << (first ? "" : " ") << x.get<std::string>();
      first = false;
    }
    out << '\n';
  }
}

void emit(const json& obj, Format fmt, const std::string& kind, std::ostream& out) {
  if (fmt == Format::Json || obj.contains("error")) {
    out << obj.dump() << '\n';
    return;
  }
  if (kind == "gkdim") {
    render_fields(obj, {"n", "nu0", "a_value", "gk_dimension", "integral"}, out);
    std::size_t i = 0;
    for (const auto& c : obj.at("classes")) {
      out << "class " << ++i << " indices:";
      for (const auto& idx : c.at("indices")) out << ' ' << idx.get<std::size_t>();
      out << '\n';
      render_tableau(c.at("tableau"), out);
    }
  } else if (kind == "hermitian") {
    render_fields(obj, {"p", "q", "integral", "m", "second_column", "xi", "gk_dimension", "orbit_index",
                        "orbit_dimension"},
                  out);
    out << "tableau:\n";
    for (const auto& t : obj.at("tableaux")) {
      render_tableau(t, out);
      out << '\n';
    }
  } else if (kind == "series") {
    render_fields(obj, {"p", "q", "zero_beyond"}, out);
    for (const auto& pt : obj.at("series")) {
      out << "z " << pt.at("z").get<long>() << ": " << pt.at("gk_dimension").get<std::size_t>() << '\n';
    }
  } else if (kind == "unitary") {
    render_fields(obj, {"p", "q", "z", "p_prime", "q_prime", "threshold_real", "threshold_int",
                        "gk_dimension"},
                  out);
  } else {
    render_fields(obj, {"rank", "checked", "ok"}, out);
    for (const auto& d : obj.at("discrepancies")) out << "mismatch: " << d.dump() << '\n';
  }
}

json hermitian_json(const Weight& w, const PQContext& ctx) {
  const auto report = gk_pq(w, ctx);
  json j = to_json(report);
  json tabs = json::array();
  for (const auto& t : report.tableaux.tableaux) tabs.push_back(to_json(t));
  j["tableaux"] = std::move(tabs);
  return j;
}

json verify_oracle(std::size_t rank) {
  json mismatches = json::array();
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= rank; ++n) {
    const auto& algebra = HeckeAlgebra::shared(n);
    for (const auto& sigma : algebra.elements()) {
      const std::size_t hecke = algebra.a_function(sigma);
      const std::size_t tableau = a_value_of_permutation(sigma);
      ++checked;
      if (hecke != tableau) {
        mismatches.push_back({{"permutation", sigma.one_line()}, {"hecke", hecke}, {"tableau", tableau}});
      }
    }
  }
  return {{"rank", rank}, {"checked", checked}, {"ok", mismatches.empty()},
          {"discrepancies", std::move(mismatches)}};
}

// Runs one computation, converting library exceptions to error objects.
std::pair<json, int> guarded(const std::function<json()>& body) {
  try {
    return {body(), kOk};
  } catch (const ParseError& e) {
    return {error_object("parse", e.what()), kParseError};
  } catch (const UsageError& e) {
    return {error_object("parse", e.what()), kParseError};
  } catch (const DomainError& e) {
    return {error_object("domain", e.what(), e.precondition(), e.indices()), kDomainError};
  } catch (const InvalidContext& e) {
    return {error_object("domain", e.what(), "context"), kDomainError};
  } catch (const OracleScopeError& e) {
    return {error_object("domain", e.what(), "rank_bound"), kDomainError};
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Gelfand-Kirillov dimensions of simple highest weight sl(n)-modules and of highest weight\n"
      "Harish-Chandra modules of su(p,q).\n\n"
      "Weights are ALWAYS given as lambda+rho coordinates, e.g. --weight \"3,3.5,2,1.5,-1\".\n"
      "Entries may be integers, fractions (7/2) or exact decimals (3.5)."};
  app.require_subcommand(1);
  Options opt;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", opt.output, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
  };
  auto add_weight = [&](CLI::App* sub, bool batchable) {
    auto* w = sub->add_option("--weight", opt.weight, "lambda+rho coordinates, comma separated");
    if (batchable) {
      auto* b = sub->add_flag("--batch", opt.batch, "read one weight per line from standard input");
      w->excludes(b);
    } else {
      w->required();
    }
  };

  auto* gk_cmd = app.add_subcommand("gkdim", "GK dimension of L(lambda) for sl(n)");
  add_weight(gk_cmd, true);
  add_output(gk_cmd);

  auto* herm_cmd = app.add_subcommand("hermitian", "GK dimension and associated variety for su(p,q)");
  add_weight(herm_cmd, true);
  herm_cmd->add_option("--pq", opt.pq, "signature p,q")->required();
  add_output(herm_cmd);

  auto* series_cmd = app.add_subcommand("series", "GK dimension of L(lambda~ + z zeta) over integer z");
  add_weight(series_cmd, false);
  series_cmd->add_option("--pq", opt.pq, "signature p,q")->required();
  series_cmd->add_option("--z-range", opt.z_range, "first,last integer z")->required();
  add_output(series_cmd);

  auto* unitary_cmd = app.add_subcommand("unitary", "GK dimension at a unitary point lambda~ + z zeta");
  add_weight(unitary_cmd, false);
  unitary_cmd->add_option("--pq", opt.pq, "signature p,q")->required();
  unitary_cmd->add_option("--z", opt.z, "rational z")->required();
  add_output(unitary_cmd);

  auto* oracle_cmd = app.add_subcommand("verify-oracle", "cross-check a(sigma) against the Hecke algebra");
  oracle_cmd->add_option("--rank", opt.rank, "largest n to check")->check(CLI::Range(1, 8));
  add_output(oracle_cmd);

  std::vector<const char*> argv{"gkdim"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << error_object("parse", e.what()).dump() << '\n';
    err << e.what() << '\n';
    return kParseError;
  }

  const Format fmt = opt.output == "pretty" ? Format::Pretty : Format::Json;

  if (gk_cmd->parsed() || herm_cmd->parsed()) {
    const bool hermitian = herm_cmd->parsed();
    const std::string kind = hermitian ? "hermitian" : "gkdim";
    auto one = [&](const std::string& text) {
      return guarded([&] {
        const Weight w = Weight::parse(text);
        return hermitian ? hermitian_json(w, parse_pq(opt.pq)) : to_json(gk_dimension(w));
      });
    };
    if (!opt.batch) {
      if (!(hermitian ? herm_cmd : gk_cmd)->count("--weight")) {
        out << error_object("parse", "--weight or --batch is required").dump() << '\n';
        return kParseError;
      }
      auto [result, code] = one(opt.weight);
      emit(result, fmt, kind, out);
      return code;
    }
    int worst = kOk;
    std::string line;
    while (std::getline(in, line)) {
      if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
      auto [result, code] = one(line);
      out << result.dump() << '\n';
      worst = std::max(worst, code);
    }
    return worst;
  }

  std::pair<json, int> result;
  std::string kind;
  if (series_cmd->parsed()) {
    kind = "series";
    result = guarded([&] {
      const Weight w = Weight::parse(opt.weight);
      const PQContext ctx = parse_pq(opt.pq);
      const auto [from, to] = split_pair(opt.z_range, "--z-range");
      const auto series = gkdim_series(w, ctx, parse_int(from, "--z-range"), parse_int(to, "--z-range"));
      json pts = json::array();
      for (const auto& pt : series) pts.push_back({{"z", pt.z}, {"gk_dimension", pt.gk_dimension}});
      json j = {{"p", ctx.p}, {"q", ctx.q}, {"series", std::move(pts)}};
      if (is_integral(w)) j["zero_beyond"] = (w[ctx.p] - w[ctx.p - 1]).to_string();
      return j;
    });
  } else if (unitary_cmd->parsed()) {
    kind = "unitary";
    result = guarded([&] {
      const Weight w = Weight::parse(opt.weight);
      const PQContext ctx = parse_pq(opt.pq);
      const Rational z = Rational::parse(opt.z);
      const auto iv = unitary_interval(w, ctx);
      json j = to_json(iv);
      j["p"] = ctx.p;
      j["q"] = ctx.q;
      j["z"] = z.to_string();
      j["gk_dimension"] = unitary_gkdim(w, ctx, z);
      return j;
    });
  } else {
    kind = "verify-oracle";
    result = guarded([&] { return verify_oracle(opt.rank); });
    if (result.second == kOk && !result.first.at("ok").get<bool>()) result.second = kOracleMismatch;
  }
  emit(result.first, fmt, kind, out);
  return result.second;
}

}  // namespace gkdim::cli
