#include <cctype>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "z2dyn/cheb_decomposition.hpp"
#include "z2dyn/chebyshev.hpp"
#include "z2dyn/decomposition.hpp"
#include "z2dyn/dynamics.hpp"
#include "z2dyn/parser.hpp"
#include "z2dyn/report.hpp"

namespace {

using namespace z2dyn;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

// The CLI never raises the engines' enumeration guard.
constexpr int kLevelCap = kDefaultLevelGuard;

// Balls are written "c+2^k", comma-separated: "2+2^3,6+2^3", "-1+2^5".
std::vector<Ball> parse_ball_spec(const std::string& spec) {
  std::vector<Ball> out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < spec.size() && std::isspace(static_cast<unsigned char>(spec[pos]))) ++pos;
  };
  auto integer = [&](const std::string& what) {
    skip_ws();
    std::size_t start = pos;
    if (pos < spec.size() && (spec[pos] == '-' || spec[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
    if (pos == digits) throw ParseError("expected " + what, start);
    return ExactInt(spec.substr(start, pos - start));
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= spec.size() || spec[pos] != c)
      throw ParseError(std::string("expected '") + c + "' in ball spec", pos);
    ++pos;
  };

  for (;;) {
    const ExactInt center = integer("ball center");
    expect('+');
    expect('2');
    expect('^');
    const ExactInt level = integer("ball level");
    if (level < 1 || level > 63) throw ParseError("ball level out of range", pos);
    out.push_back(Ball{reduce(center, static_cast<int>(level))});
    skip_ws();
    if (pos >= spec.size()) break;
    expect(',');
  }
  return out;
}

struct OutputSink {
  std::string format = "text";

  bool json() const { return format == "json"; }

  void emit(Json command, Json payload, const std::string& text) const {
    if (json())
      std::cout << report_envelope(std::move(command), std::move(payload)).dump(2) << "\n";
    else
      std::cout << text;
  }

  int error(const std::string& code, const std::string& message, int exit_code) const {
    if (json())
      std::cout << error_document(code, message).dump(2) << "\n";
    else
      std::cerr << "error: " << message << "\n";
    return exit_code;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact minimal decompositions of polynomial maps on the 2-adic integers"};
  app.require_subcommand(1);

  OutputSink sink;
  long m = 0;
  bool check_valuations = false;
  std::string poly_text;
  std::string ball_spec;
  int max_level = 0;
  int level = 0;
  int check_level = 0;

  auto add_format = [&sink](CLI::App* cmd) {
    cmd->add_option("--format", sink.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* cheb = app.add_subcommand("cheb", "Chebyshev polynomial tools");
  cheb->require_subcommand(1);
  CLI::App* coeffs = cheb->add_subcommand("coeffs", "print exact coefficients");
  coeffs->add_option("--m", m, "polynomial index")->required();
  coeffs->add_flag("--check-lemma", check_valuations,
                   "check the odd-coefficient valuation pattern");
  add_format(coeffs);

  CLI::App* dec = app.add_subcommand("decompose", "minimal decomposition to a level budget");
  auto* dec_m = dec->add_option("--m", m, "Chebyshev index");
  auto* dec_poly = dec->add_option("--poly", poly_text, "polynomial expression");
  dec->add_option("--max-level", max_level, "precision budget")->required();
  dec_m->excludes(dec_poly);
  add_format(dec);

  CLI::App* verify = app.add_subcommand("verify", "check the closed-form decomposition of T_m");
  verify->add_option("--m", m, "Chebyshev index")->required();
  verify->add_option("--max-level", max_level, "precision budget")->required();
  add_format(verify);

  CLI::App* classify_cmd = app.add_subcommand("classify", "classify all cycles at one level");
  classify_cmd->add_option("--poly", poly_text, "polynomial expression")->required();
  classify_cmd->add_option("--level", level, "residue level")->required();
  add_format(classify_cmd);

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force certificates");
  oracle->require_subcommand(1);
  CLI::App* minimal = oracle->add_subcommand("minimal", "exhaustive minimality check");
  minimal->add_option("--poly", poly_text, "polynomial expression")->required();
  minimal->add_option("--balls", ball_spec, "comma-separated balls \"c+2^k\"")->required();
  minimal->add_option("--check-level", check_level, "deepest level to certify")->required();
  add_format(minimal);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (coeffs->parsed()) {
      if (m < 1) return sink.error("usage", "need m >= 1", kExitUsage);
      const IntPolynomial T = chebyshev_recurrence(m);
      CoeffValuationReport rep;
      if (check_valuations) rep = check_coeff_valuations(m);
      const CoeffValuationReport* repp = check_valuations ? &rep : nullptr;
      Json cmd{{"name", "cheb coeffs"}, {"m", m}, {"check_lemma", check_valuations}};
      sink.emit(cmd, coeff_report_to_json(m, T, repp), coeff_report_to_text(m, T, repp));
      return (check_valuations && !rep.pass) ? kExitFail : kExitPass;
    }

    if (dec->parsed()) {
      IntPolynomial f;
      Json cmd{{"name", "decompose"}, {"max_level", max_level}};
      if (*dec_poly) {
        f = parse_poly(poly_text);
        cmd["poly"] = poly_text;
      } else if (*dec_m) {
        f = chebyshev_recurrence(m);
        cmd["m"] = m;
      } else {
        return sink.error("usage", "decompose needs --m or --poly", kExitUsage);
      }
      const Decomposition d = decompose(f, max_level, kLevelCap);
      sink.emit(cmd, decomposition_to_json(d), decomposition_to_text(d));
      return kExitPass;
    }

    if (verify->parsed()) {
      const VerificationReport rep = verify_decomposition(m, max_level, kLevelCap);
      Json cmd{{"name", "verify"}, {"m", m}, {"max_level", max_level}};
      sink.emit(cmd, verification_to_json(rep), verification_to_text(rep));
      return rep.pass ? kExitPass : kExitFail;
    }

    if (classify_cmd->parsed()) {
      const IntPolynomial f = parse_poly(poly_text);
      const std::vector<Cycle> cycles = cycles_at_level(f, level, kLevelCap);
      std::vector<CycleClass> classes;
      classes.reserve(cycles.size());
      for (const auto& c : cycles) classes.push_back(classify(f, c));
      Json cmd{{"name", "classify"}, {"poly", poly_text}, {"level", level}};
      sink.emit(cmd, classification_to_json(poly_text, level, cycles, classes),
                classification_to_text(level, cycles, classes));
      return kExitPass;
    }

    if (minimal->parsed()) {
      const IntPolynomial f = parse_poly(poly_text);
      const std::vector<Ball> balls = parse_ball_spec(ball_spec);
      const bool verdict = minimality_oracle(f, balls, check_level, kLevelCap);
      Json cmd{{"name", "oracle minimal"},
               {"poly", poly_text},
               {"balls", ball_spec},
               {"check_level", check_level}};
      sink.emit(cmd, minimality_to_json(poly_text, balls, check_level, verdict),
                minimality_to_text(balls, check_level, verdict));
      return verdict ? kExitPass : kExitFail;
    }

    return sink.error("usage", "no command", kExitUsage);
  } catch (const ParseError& e) {
    return sink.error("parse", e.what(), kExitUsage);
  } catch (const BudgetError& e) {
    return sink.error("budget", e.what(), kExitBudget);
  } catch (const std::invalid_argument& e) {
    return sink.error("usage", e.what(), kExitUsage);
  } catch (const std::exception& e) {
    return sink.error("internal", e.what(), kExitUsage);
  }
}
