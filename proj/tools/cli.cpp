#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hermite2/hermite2.hpp"

namespace {

using hermite2::BaseKind;
using hermite2::Fe;
using hermite2::Field;
using hermite2::OpCounts;
using hermite2::Poly;
using json = nlohmann::ordered_json;

// Exit codes: 0 success, 1 property/assertion failure, 2 usage or parse error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Fe> read_elements_from(const std::string& path, const Field& f) {
  if (path == "-") return hermite2::read_elements(std::cin, f);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  return hermite2::read_elements(in, f);
}

void write_elements_to(const std::string& path, std::span<const Fe> v) {
  if (path == "-") {
    hermite2::write_elements(std::cout, v);
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open output file '" + path + "'");
  hermite2::write_elements(out, v);
}

BaseKind parse_kind(const std::string& kind) {
  if (kind == "eval") return BaseKind::eval;
  if (kind == "interp") return BaseKind::interp;
  throw UsageError("--kind must be 'eval' or 'interp', got '" + kind + "'");
}

void cmd_eval(int m, std::size_t len, const std::string& in, const std::string& out) {
  const Field f = hermite2::make_field(m);
  auto coeffs = read_elements_from(in, f);
  if (coeffs.size() > len)
    throw UsageError("input holds " + std::to_string(coeffs.size()) +
                     " coefficients, more than --len " + std::to_string(len));
  Poly p(f, std::move(coeffs));
  hermite2::PlainContext ctx(f);
  const auto values = hermite2::hermite_evaluate_len(p, len, ctx);
  write_elements_to(out, values);
}

void cmd_interp(int m, std::size_t len, const std::string& in, const std::string& out) {
  const Field f = hermite2::make_field(m);
  const auto values = read_elements_from(in, f);
  if (values.size() != len)
    throw UsageError("input holds " + std::to_string(values.size()) + " values, expected exactly " +
                     std::to_string(len));
  hermite2::PlainContext ctx(f);
  const Poly p = hermite2::hermite_interpolate_len(values, ctx);
  write_elements_to(out, p.coeffs);
}

void cmd_roundtrip(int m, std::size_t len, std::uint64_t seed, std::size_t trials) {
  const Field f = hermite2::make_field(m);
  if (len < 1) throw UsageError("--len must be >= 1");
  std::cout << "seed: " << seed << "\n";
  hermite2::PlainContext ctx(f);
  std::mt19937_64 gen(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const Poly p = hermite2::random_poly(gen, f, len);
    const auto fast = hermite2::hermite_evaluate_len(p, len, ctx);
    const auto naive = hermite2::hermite_eval_naive(p, len);
    const Poly back = hermite2::hermite_interpolate_len(fast, ctx);
    const Poly back_naive = hermite2::hermite_interp_naive(f, fast);
    if (fast != naive || !(back == p) || !(back_naive == p)) {
      std::ostringstream msg;
      msg << "FAIL trial " << t << ": ";
      if (fast != naive)
        msg << "fast evaluation disagrees with the naive oracle";
      else if (!(back == p))
        msg << "interpolate(evaluate(p)) != p";
      else
        msg << "naive interpolation disagrees with the fast transform";
      msg << "; reproduce: hermite2 roundtrip --field " << m << " --len " << len << " --seed "
          << seed << " --trials " << trials;
      throw CheckFailure(msg.str());
    }
  }
  std::cout << "OK " << trials << " trials\n";
}

struct CountReport {
  json doc;
  bool pass = false;
};

CountReport run_count(const Field& f, std::size_t len, BaseKind kind, std::uint64_t seed) {
  const std::size_t q = f.order();
  const int n = hermite2::depth_for_length(len, q);
  std::mt19937_64 gen(seed);

  OpCounts counts;
  if (kind == BaseKind::eval) {
    const Poly p = hermite2::random_poly(gen, f, len);
    counts = hermite2::counted_run(p, len).second;
  } else {
    const auto h = hermite2::random_values(gen, f, len);
    counts = hermite2::counted_run(f, h).second;
  }

  // Per-c base-call counts; duplicate-c records must agree.
  std::map<std::size_t, hermite2::BaseCallRecord> per_c;
  bool consistent = true;
  for (const auto& rec : counts.base_calls) {
    auto [it, inserted] = per_c.emplace(rec.c, rec);
    if (!inserted && !(it->second == rec)) consistent = false;
  }
  const auto base_count = [&per_c](auto member) {
    return [&per_c, member](std::size_t c) -> std::uint64_t {
      const auto it = per_c.find(c);
      if (it == per_c.end())
        throw std::logic_error("missing base-call record for c=" + std::to_string(c));
      return it->second.*member;
    };
  };

  const std::uint64_t predicted_muls =
      hermite2::predicted_mul_count(base_count(&hermite2::BaseCallRecord::muls), q, n, len);
  const std::uint64_t predicted_invs =
      hermite2::predicted_mul_count(base_count(&hermite2::BaseCallRecord::invs), q, n, len);
  const std::size_t blocks = (len + q - 1) / q;
  const std::uint64_t a0q = blocks > 1 ? per_c.at(q).adds : 0;
  const std::uint64_t a0rem = per_c.at(hermite2::modstar(len, q)).adds;
  const std::uint64_t add_bound = hermite2::predicted_add_bound(a0q, a0rem, q, n, len, kind);

  const bool mul_law = consistent && counts.muls == predicted_muls;
  const bool inv_law = consistent && counts.invs == predicted_invs;
  const bool add_ok = counts.adds <= add_bound;
  const bool reduction_mul_free = counts.muls == counts.base_muls();

  CountReport rep;
  rep.pass = mul_law && inv_law && add_ok && reduction_mul_free;
  rep.doc = json{{"seed", seed},
                 {"field", f.degree()},
                 {"q", q},
                 {"len", len},
                 {"n", n},
                 {"kind", hermite2::kind_name(kind)},
                 {"counts", counts},
                 {"predicted_muls", predicted_muls},
                 {"predicted_invs", predicted_invs},
                 {"add_bound", add_bound},
                 {"mul_law_pass", mul_law},
                 {"inv_law_pass", inv_law},
                 {"add_bound_pass", add_ok},
                 {"reduction_mul_free", reduction_mul_free},
                 {"pass", rep.pass}};
  return rep;
}

void cmd_count(int m, std::size_t len, const std::string& kind, bool as_json, std::uint64_t seed) {
  const Field f = hermite2::make_field(m);
  if (len < 1) throw UsageError("--len must be >= 1");
  const CountReport rep = run_count(f, len, parse_kind(kind), seed);
  if (as_json) {
    std::cout << rep.doc.dump() << "\n";
  } else {
    for (const auto& [key, value] : rep.doc.items()) {
      if (key == "pass" || key.ends_with("_pass") || key == "reduction_mul_free")
        std::cout << key << ": " << (value.get<bool>() ? "PASS" : "FAIL") << "\n";
      else if (value.is_string())
        std::cout << key << ": " << value.get<std::string>() << "\n";
      else
        std::cout << key << ": " << value.dump() << "\n";
    }
  }
  if (!rep.pass) throw CheckFailure("operation-count checks failed");
}

// Grid spec: "<term>..<term>[ step <term>]" or a single term, where a term
// is an integer, optionally scaled by the field order: "q", "8q", "256".
std::vector<std::size_t> parse_grid(const std::string& spec, std::size_t q) {
  const auto parse_term = [q](std::string tok) -> std::size_t {
    std::size_t scale = 1;
    if (!tok.empty() && (tok.back() == 'q' || tok.back() == 'Q')) {
      scale = q;
      tok.pop_back();
      if (tok.empty()) return q;
    }
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      return std::size_t(v) * scale;
    } catch (const std::exception&) {
      throw UsageError("bad grid term '" + tok + "'");
    }
  };

  std::string body = spec;
  std::size_t step = q;
  if (const auto at = body.find(" step "); at != std::string::npos) {
    step = parse_term(body.substr(at + 6));
    body = body.substr(0, at);
    if (step == 0) throw UsageError("grid step must be >= 1");
  }
  std::size_t lo = 0, hi = 0;
  if (const auto dots = body.find(".."); dots != std::string::npos) {
    lo = parse_term(body.substr(0, dots));
    hi = parse_term(body.substr(dots + 2));
  } else {
    lo = hi = parse_term(body);
  }
  std::vector<std::size_t> lens;
  for (std::size_t l = lo; l <= hi; l += step) lens.push_back(l);
  return lens;
}

void cmd_bench(int m, const std::string& grid, const std::string& kind, bool as_json,
               std::uint64_t seed) {
  const Field f = hermite2::make_field(m);
  const BaseKind k = parse_kind(kind);
  const auto lens = parse_grid(grid, f.order());
  if (!as_json)
    std::cout << "# seed: " << seed << "\nlen\tn\tms\tadds\tmuls\tinvs\tbase_calls\n";
  std::mt19937_64 gen(seed);
  for (const std::size_t len : lens) {
    if (len < 1) throw UsageError("grid lengths must be >= 1");
    const int n = hermite2::depth_for_length(len, f.order());
    OpCounts counts;
    const auto t0 = std::chrono::steady_clock::now();
    if (k == BaseKind::eval) {
      const Poly p = hermite2::random_poly(gen, f, len);
      counts = hermite2::counted_run(p, len).second;
    } else {
      const auto h = hermite2::random_values(gen, f, len);
      counts = hermite2::counted_run(f, h).second;
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (as_json) {
      json row{{"seed", seed}, {"len", len}, {"n", n}, {"kind", hermite2::kind_name(k)},
               {"ms", ms}, {"counts", counts}};
      std::cout << row.dump() << "\n";
    } else {
      std::cout << len << "\t" << n << "\t" << ms << "\t" << counts.adds << "\t" << counts.muls
                << "\t" << counts.invs << "\t" << counts.base_calls.size() << "\n";
    }
  }
}

void cmd_encode(int m, std::size_t mult, const std::string& in, const std::string& out) {
  const Field f = hermite2::make_field(m);
  if (mult < 1) throw UsageError("--mult must be >= 1");
  auto message = read_elements_from(in, f);
  const std::size_t len = mult * f.order();
  if (message.size() > len)
    throw UsageError("message holds " + std::to_string(message.size()) +
                     " coefficients, more than mult * q = " + std::to_string(len));
  Poly p(f, std::move(message));
  hermite2::PlainContext ctx(f);
  const auto codeword = hermite2::hermite_evaluate_len(p, len, ctx);
  write_elements_to(out, codeword);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermite evaluation and interpolation over GF(2^m)"};
  app.require_subcommand(1);

  int m = 1;
  std::size_t len = 1;
  std::size_t trials = 100;
  std::size_t mult = 1;
  std::uint64_t seed = 1;
  std::string in = "-", out = "-", kind = "eval", grid;
  bool as_json = false;

  auto* eval = app.add_subcommand("eval", "Evaluate Hermite derivative values from coefficients");
  eval->add_option("--field", m, "extension degree m of GF(2^m)")->required();
  eval->add_option("--len", len, "problem length")->required();
  eval->add_option("--in", in, "coefficient file, '-' for stdin");
  eval->add_option("--out", out, "output file, '-' for stdout");

  auto* interp = app.add_subcommand("interp", "Recover coefficients from Hermite values");
  interp->add_option("--field", m, "extension degree m of GF(2^m)")->required();
  interp->add_option("--len", len, "problem length")->required();
  interp->add_option("--in", in, "value file, '-' for stdin");
  interp->add_option("--out", out, "output file, '-' for stdout");

  auto* roundtrip = app.add_subcommand("roundtrip", "Check eval/interp identities on random input");
  roundtrip->add_option("--field", m, "extension degree m of GF(2^m)")->required();
  roundtrip->add_option("--len", len, "problem length")->required();
  roundtrip->add_option("--seed", seed, "random seed");
  roundtrip->add_option("--trials", trials, "number of random polynomials");

  auto* count = app.add_subcommand("count", "Count field operations and check the count laws");
  count->add_option("--field", m, "extension degree m of GF(2^m)")->required();
  count->add_option("--len", len, "problem length")->required();
  count->add_option("--kind", kind, "transform: eval or interp");
  count->add_option("--seed", seed, "random seed");
  count->add_flag("--json", as_json, "emit one JSON object");

  auto* bench = app.add_subcommand("bench", "Time transforms over a grid of lengths");
  bench->add_option("--field", m, "extension degree m of GF(2^m)")->required();
  bench->add_option("--len-grid", grid, "grid spec, e.g. 'q..8q step q' or '256..2048'")
      ->required();
  bench->add_option("--kind", kind, "transform: eval or interp");
  bench->add_option("--seed", seed, "random seed");
  bench->add_flag("--json", as_json, "emit one JSON object per length");

  auto* encode = app.add_subcommand("encode", "Multiplicity-style encoding: all derivative orders "
                                              "below --mult at every field point");
  encode->add_option("--field", m, "extension degree m of GF(2^m)")->required();
  encode->add_option("--mult", mult, "derivative orders per point")->required();
  encode->add_option("--in", in, "message coefficient file, '-' for stdin");
  encode->add_option("--out", out, "codeword file, '-' for stdout");

  try {
    app.parse(argc, argv);
    if (eval->parsed()) cmd_eval(m, len, in, out);
    if (interp->parsed()) cmd_interp(m, len, in, out);
    if (roundtrip->parsed()) cmd_roundtrip(m, len, seed, trials);
    if (count->parsed()) cmd_count(m, len, kind, as_json, seed);
    if (bench->parsed()) cmd_bench(m, grid, kind, as_json, seed);
    if (encode->parsed()) cmd_encode(m, mult, in, out);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const hermite2::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CheckFailure& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
