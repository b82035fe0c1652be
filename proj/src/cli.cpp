#include "noncross/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>

#include "noncross/error.hpp"
#include "noncross/expr.hpp"
#include "noncross/format.hpp"
#include "noncross/obstruct.hpp"
#include "noncross/valtheory.hpp"
#include "noncross/verify.hpp"

namespace noncross {

namespace {

using nlohmann::json;

std::vector<std::int64_t> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::kParse, "malformed " + std::string(what) + " '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == text.size()) return out;
    pos = comma + 1;
  }
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

}  // namespace

IntMatrix parse_matrix(const std::string& text) {
  IntMatrix m;
  std::string_view view(text);
  std::size_t pos = 0;
  for (;;) {
    std::size_t semi = view.find(';', pos);
    if (semi == std::string_view::npos) semi = view.size();
    m.push_back(parse_int_list(view.substr(pos, semi - pos), "matrix"));
    if (m.back().size() != m.front().size()) {
      throw Error(ErrorCode::kParse, "matrix rows have different lengths");
    }
    if (semi == view.size()) return m;
    pos = semi + 1;
  }
}

ExponentVector parse_exponent(const std::string& text) {
  return ExponentVector(parse_int_list(text, "exponent vector"));
}

std::string format_matrix(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ";";
    out += join(m[i]);
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic in twisted Laurent series division algebras", "noncross"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string blocks_text;
  int precision = 8;
  bool as_json = false;
  std::uint64_t seed = 1;
  int trials = 500;
  app.add_option("--blocks", blocks_text, "block sizes n_1,...,n_r");
  app.add_option("--prec", precision, "total-degree precision N")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--seed", seed, "RNG seed (verify)");
  app.add_option("--trials", trials, "trials per suite (verify)")->check(CLI::PositiveNumber);

  std::string expr, vec_a, vec_b, matrix;
  int root_degree = 0;
  std::int64_t degree = 0, characteristic = 0;

  auto* normalize = app.add_subcommand("normalize", "print the canonical form of an element");
  normalize->add_option("expr", expr)->required();
  auto* val_cmd = app.add_subcommand("val", "valuation v(f) = min supp(f)");
  val_cmd->add_option("expr", expr)->required();
  auto* residue_cmd = app.add_subcommand("residue", "image in the residue field");
  residue_cmd->add_option("expr", expr)->required();
  auto* inv_cmd = app.add_subcommand("inv", "inverse modulo total degree > N");
  inv_cmd->add_option("expr", expr)->required();
  auto* root_cmd = app.add_subcommand("root", "n-th root in 1 + m_D modulo total degree > N");
  root_cmd->add_option("--n", root_degree, "root degree")->required()->check(CLI::PositiveNumber);
  root_cmd->add_option("expr", expr)->required();
  auto* pairing_cmd = app.add_subcommand("pairing", "commutator pairing of two exponent vectors");
  pairing_cmd->add_option("alpha", vec_a)->required();
  pairing_cmd->add_option("beta", vec_b)->required();
  auto* image_cmd = app.add_subcommand("image", "image in Gamma_D / Gamma_F");
  image_cmd->add_option("alpha", vec_a)->required();
  auto* central_cmd = app.add_subcommand("central", "is x^alpha central");
  central_cmd->add_option("alpha", vec_a)->required();
  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf_cmd->add_option("matrix", matrix, "rows ';', entries ','")->required();
  auto* group_cmd = app.add_subcommand(
      "grouptype", "Z^d / (row lattice of MATRIX), or Gamma_D / Gamma_F with --blocks");
  group_cmd->add_option("matrix", matrix, "rows ';', entries ','");
  auto* obstruction_cmd = app.add_subcommand("obstruction", "noncrossed-product rank argument");
  obstruction_cmd->add_option("n", degree)->required();
  obstruction_cmd->add_option("--char", characteristic, "base field characteristic")
      ->check(CLI::NonNegativeNumber);
  auto* verify_cmd = app.add_subcommand("verify", "run every property suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  auto config = [&]() {
    if (blocks_text.empty()) throw Error(ErrorCode::kConfig, "--blocks is required");
    return parse_blocks(blocks_text);
  };
  auto emit = [&](const std::string& text, const json& j) {
    if (as_json) {
      out << j.dump(2) << "\n";
    } else {
      out << text << "\n";
    }
  };

  try {
    if (*normalize) {
      const auto cfg = config();
      const auto f = parse_element(expr, cfg);
      emit(format_element(f), json{{"blocks", to_json(cfg)}, {"element", to_json(f)}});
    } else if (*val_cmd) {
      const auto v = val(parse_element(expr, config()));
      emit(v.to_string(), json{{"valuation", to_json(v)}, {"text", v.to_string()}});
    } else if (*residue_cmd) {
      const auto c = residue(parse_element(expr, config()));
      emit(format_cyc(c), json{{"residue", to_json(c)}});
    } else if (*inv_cmd) {
      const auto g = inv(parse_element(expr, config()), precision);
      emit(format_element(g), json{{"inverse", to_json(g)}, {"precision", precision}});
    } else if (*root_cmd) {
      const auto b = nth_root(parse_element(expr, config()), root_degree, precision);
      emit(format_element(b),
           json{{"root", to_json(b)}, {"n", root_degree}, {"precision", precision}});
    } else if (*pairing_cmd) {
      const auto cfg = config();
      const auto eps = commutator_pairing(cfg, parse_exponent(vec_a), parse_exponent(vec_b));
      const std::string text = "zeta_" + std::to_string(eps.m) + "^" +
                               std::to_string(eps.exponent) + " = " + format_cyc(eps.to_cyc());
      emit(text, json{{"exponent", eps.exponent}, {"m", eps.m}, {"value", to_json(eps.to_cyc())}});
    } else if (*image_cmd) {
      const auto image = quotient_image(config(), parse_exponent(vec_a));
      emit("(" + join(image) + ")", json{{"image", image}});
    } else if (*central_cmd) {
      const bool central = is_central_monomial(config(), parse_exponent(vec_a));
      emit(central ? "true" : "false", json{{"central", central}});
    } else if (*snf_cmd) {
      const auto m = parse_matrix(matrix);
      const auto f = smith_normal_form(m);
      const auto d = f.diagonal();
      emit("invariant factors: " + join(d) + "\nS = " + format_matrix(f.S) +
               "\nU = " + format_matrix(f.U) + "\nV = " + format_matrix(f.V),
           json{{"invariant_factors", d}, {"S", f.S}, {"U", f.U}, {"V", f.V}});
    } else if (*group_cmd) {
      AbelianGroupType type;
      if (!matrix.empty()) {
        const auto m = parse_matrix(matrix);
        type = quotient_type(static_cast<int>(m.front().size()), IntegerLattice{static_cast<int>(m.front().size()), m});
      } else {
        const auto cfg = config();
        type = quotient_type(cfg.dim(), center_value_lattice(cfg));
      }
      const auto order = type.order();
      emit(type.to_string() + " (rank " + std::to_string(rank(type)) + ", order " +
               (order ? std::to_string(*order) : std::string("inf")) + ")",
           to_json(type));
    } else if (*obstruction_cmd) {
      const auto v = obstruction(degree, characteristic);
      std::string text(verdict_name(v.verdict));
      text += "\n  n = " + std::to_string(v.certificate.n) +
              ", char = " + std::to_string(v.certificate.characteristic);
      text += "\n  G = " + v.certificate.forced_group.to_string() +
              ", rank(G) = " + std::to_string(v.certificate.forced_rank) +
              ", D2 bound = " + std::to_string(v.certificate.second_witness_bound);
      if (v.certificate.cube_prime) {
        text += "\n  witness prime p = " + std::to_string(*v.certificate.cube_prime);
      }
      text += "\n  D1 blocks " + v.certificate.first_witness->to_string() + ", D2 blocks " +
              v.certificate.second_witness->to_string();
      for (const auto& step : v.certificate.trail) text += "\n  - " + step;
      emit(text, to_json(v));
    } else if (*verify_cmd) {
      VerifyOptions options;
      options.seed = seed;
      options.trials = trials;
      if (!blocks_text.empty()) options.configs.push_back(config());
      const auto results = run_verify(options);
      bool all = true;
      json suites = json::array();
      std::string text;
      for (const auto& r : results) {
        all = all && r.passed;
        text += (r.passed ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.checks) +
                " checks)" + (r.passed ? "" : ": " + r.detail) + "\n";
        suites.push_back(json{{"name", r.name}, {"passed", r.passed}, {"checks", r.checks},
                              {"detail", r.detail}});
      }
      text += all ? "all suites passed" : "some suites FAILED";
      emit(text, json{{"seed", seed}, {"trials", trials}, {"passed", all}, {"suites", suites}});
      return all ? kExitOk : kExitVerifyFailed;
    }
  } catch (const Error& e) {
    err << error_tag(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitOk;
}

}  // namespace noncross
