#include "mixeddet/cli.hpp"

#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "mixeddet/io.hpp"
#include "mixeddet/mixeddet.hpp"
#include "mixeddet/stability.hpp"
#include "mixeddet/theorems.hpp"

namespace mixeddet::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Config {
  std::string output = "json";
  std::string mode = "exact";
  std::uint64_t seed = 0;
  int trials = 1000;
  int instances = 10;
  int order = 4;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

ExponentVector parse_exponents(const std::string& text) {
  ExponentVector out;
  for (const auto& s : split_list(text)) {
    const Rational q = parse_rational(s);
    if (q < 0 || denominator(q) != 1) throw UsageError("expected nonnegative integers, got '" + text + "'");
    out.push_back(static_cast<int>(numerator(q)));
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& s : split_list(text)) out.push_back(parse_rational(s));
  return out;
}

HermitianMatrix load_matrix(const std::string& path) {
  auto in = parse_input(path);
  if (auto* m = std::get_if<HermitianMatrix>(&in)) return *m;
  throw std::invalid_argument(path + ": expected a matrix document");
}

Pencil load_pencil(const std::string& path) {
  auto in = parse_input(path);
  if (auto* p = std::get_if<Pencil>(&in)) return *p;
  if (auto* m = std::get_if<HermitianMatrix>(&in)) return Pencil::scalar_multiple(*m);
  throw std::invalid_argument(path + ": expected a pencil or matrix document");
}

UniPoly load_unipoly(const std::string& path) {
  auto in = parse_input(path);
  if (auto* p = std::get_if<UniPoly>(&in)) return *p;
  if (auto* f = std::get_if<MultiPoly>(&in)) {
    if (f->nvars() == 1) return diagonal_restriction(*f);
  }
  throw std::invalid_argument(path + ": expected a univariate polynomial (coefficient array)");
}

MultiPoly load_multipoly(const std::string& path) {
  auto in = parse_input(path);
  if (auto* f = std::get_if<MultiPoly>(&in)) return *f;
  throw std::invalid_argument(path + ": expected a multivariate polynomial ([exponents, coefficient] list)");
}

void emit(std::ostream& out, const Json& doc, const Config& cfg) {
  if (cfg.output == "json") {
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    if (key == "schema") continue;
    if (key == "reports") {
      for (const auto& r : value) {
        out << r.at("claim").get<std::string>() << ' ' << r.at("instance").get<std::string>() << ' '
            << r.at("verdict").get<std::string>() << '\n';
        if (!r.at("witness").is_null()) out << "  witness: " << r.at("witness").dump() << '\n';
      }
      continue;
    }
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

Json header(const std::string& command) { return Json{{"schema", kSchemaVersion}, {"command", command}}; }

void require_exact(const Config& cfg, const std::string& command) {
  if (cfg.mode != "exact") throw UsageError("--mode float is supported only by 'eta' (got '" + command + "')");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixed determinants, real-rootedness and determinantal inequality checks", "mixeddet"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--output", cfg.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--mode", cfg.mode, "exact or float (eta only)")->check(CLI::IsMember({"exact", "float"}));

  std::vector<std::string> files;
  std::string method = "fast";
  auto* eta = app.add_subcommand("eta", "mixed determinant of Hermitian matrices");
  eta->add_option("matrices", files, "matrix JSON files")->required();
  eta->add_option("--method", method, "fast or naive")->check(CLI::IsMember({"fast", "naive"}));

  std::string file_a, file_b;
  auto* eta_char_cmd = app.add_subcommand("eta-char", "eta(zA, -B) as a polynomial in z");
  eta_char_cmd->add_option("A", file_a)->required();
  eta_char_cmd->add_option("B", file_b)->required();

  int augment = 0;
  std::string pencil_method = "auto";
  auto* eta_pencil_cmd = app.add_subcommand("eta-pencil", "mixed determinant of linear pencils");
  eta_pencil_cmd->add_option("pencils", files, "pencil (or matrix) JSON files")->required();
  eta_pencil_cmd->add_option("--augment", augment, "add v * eta(L[{j}']) for this 1-based j");
  eta_pencil_cmd->add_option("--method", pencil_method, "auto, symbolic or interpolation")
      ->check(CLI::IsMember({"auto", "symbolic", "interpolation"}));

  int fischer_k_value = -1;
  std::string alpha_text;
  auto* fischer_cmd = app.add_subcommand("fischer", "symmetrized Fischer products");
  fischer_cmd->add_option("A", file_a)->required();
  fischer_cmd->add_option("--k", fischer_k_value, "block size k");
  fischer_cmd->add_option("--alpha", alpha_text, "composition of d, e.g. 2,1,1");

  std::string x_text, y_text;
  int pinch_i = 0, pinch_t = 0;
  auto* majorize_cmd = app.add_subcommand("majorize", "is x majorized by y");
  majorize_cmd->add_option("x", x_text)->required();
  majorize_cmd->add_option("y", y_text)->required();
  majorize_cmd->add_option("--pinch", pinch_i, "also report the pinch of y at this 1-based rank");
  majorize_cmd->add_option("--t", pinch_t, "pinch amount");

  std::string stable_mode = "multiaffine", direction_text;
  auto* stable_cmd = app.add_subcommand("stable", "real stability checks");
  auto* check_cmd = stable_cmd->add_subcommand("check", "decide or sample stability of a polynomial");
  stable_cmd->require_subcommand(1);
  check_cmd->add_option("f", file_a, "polynomial JSON")->required();
  check_cmd->add_option("--mode", stable_mode)->check(CLI::IsMember({"multiaffine", "lines", "direction"}));
  check_cmd->add_option("--direction", direction_text, "direction e for --mode direction, e.g. 1,0,0");
  check_cmd->add_option("--trials", cfg.trials);
  check_cmd->add_option("--seed", cfg.seed);

  std::string claim_text;
  auto* verify_cmd = app.add_subcommand("verify", "randomized verification suite for one claim");
  verify_cmd->add_option("claim", claim_text, "CONJ1 ... COR45")->required();
  verify_cmd->add_option("--instances", cfg.instances)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", cfg.seed);
  verify_cmd->add_option("--order", cfg.order)->check(CLI::Range(1, 12));

  auto* inertia_cmd = app.add_subcommand("inertia", "(plus, zero, minus) root counts");
  inertia_cmd->add_option("input", file_a, "univariate polynomial or Hermitian matrix")->required();

  auto* interlace_cmd = app.add_subcommand("interlace", "do the roots of p and q interlace");
  interlace_cmd->add_option("p", file_a)->required();
  interlace_cmd->add_option("q", file_b)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (eta->parsed()) {
      Json doc = header("eta");
      doc["mode"] = cfg.mode;
      doc["method"] = method;
      std::vector<HermitianMatrix> ms;
      for (const auto& f : files) ms.push_back(load_matrix(f));
      if (cfg.mode == "exact") {
        const Rational v = method == "naive" ? eta_naive(ms).re() : eta_fast(ms).re();
        doc["value"] = to_json(v);
      } else {
        std::vector<FloatHermitian> fs;
        for (const auto& m : ms) fs.push_back(to_floating(m));
        const std::complex<double> v = method == "naive" ? eta_naive(fs) : eta_fast(fs);
        doc["value"] = v.real();
      }
      emit(out, doc, cfg);
      return 0;
    }
    if (eta_char_cmd->parsed()) {
      require_exact(cfg, "eta-char");
      const UniPoly p = eta_char(load_matrix(file_a), load_matrix(file_b));
      Json doc = header("eta-char");
      doc["degree"] = p.degree();
      doc["polynomial"] = to_json(p);
      emit(out, doc, cfg);
      return 0;
    }
    if (eta_pencil_cmd->parsed()) {
      require_exact(cfg, "eta-pencil");
      std::vector<Pencil> ps;
      for (const auto& f : files) ps.push_back(load_pencil(f));
      const PencilMethod pm = pencil_method == "symbolic"        ? PencilMethod::Symbolic
                              : pencil_method == "interpolation" ? PencilMethod::Interpolation
                                                                 : PencilMethod::Automatic;
      Json doc = header("eta-pencil");
      MultiPoly f;
      if (eta_pencil_cmd->count("--augment") > 0) {
        const int n = static_cast<int>(ps.front().order());
        if (augment < 1 || augment > n) throw UsageError("--augment must lie in [1, " + std::to_string(n) + "]");
        f = eta_pencil_augmented(ps, augment - 1, pm);
        doc["augment"] = augment;
      } else {
        f = eta_pencil(ps, pm);
      }
      doc["nvars"] = f.nvars();
      doc["polynomial"] = to_json(f);
      emit(out, doc, cfg);
      return 0;
    }
    if (fischer_cmd->parsed()) {
      require_exact(cfg, "fischer");
      const FischerProducts fp(load_matrix(file_a));
      Json doc = header("fischer");
      auto pair_json = [](const FischerPair& p) { return Json{{"sum", to_json(p.sum)}, {"average", to_json(p.average)}}; };
      if (!alpha_text.empty()) {
        const ExponentVector alpha = parse_exponents(alpha_text);
        doc["alpha"] = to_json(alpha);
        doc["result"] = pair_json(fp.of(alpha));
      } else if (fischer_cmd->count("--k") > 0) {
        doc["k"] = fischer_k_value;
        doc["result"] = pair_json(fp.k_th(fischer_k_value));
      } else {
        Json all = Json::array();
        for (int k = 0; k <= fp.order(); ++k) all.push_back(pair_json(fp.k_th(k)));
        doc["by_k"] = std::move(all);
      }
      emit(out, doc, cfg);
      return 0;
    }
    if (majorize_cmd->parsed()) {
      const ExponentVector x = parse_exponents(x_text), y = parse_exponents(y_text);
      Json doc = header("majorize");
      doc["x"] = to_json(x);
      doc["y"] = to_json(y);
      const bool ok = is_majorized_by(x, y);
      doc["majorized"] = ok;
      if (majorize_cmd->count("--pinch") > 0) doc["pinch"] = to_json(pinch(y, pinch_i - 1, pinch_t));
      emit(out, doc, cfg);
      return ok ? 0 : 1;
    }
    if (check_cmd->parsed()) {
      require_exact(cfg, "stable");
      const MultiPoly f = load_multipoly(file_a);
      StabilityVerdict v;
      if (stable_mode == "multiaffine") {
        v = multiaffine_stability_check(f, cfg.trials, cfg.seed);
      } else if (stable_mode == "lines") {
        v = line_restriction_test(f, cfg.trials, cfg.seed);
      } else {
        std::vector<Rational> e = direction_text.empty() ? std::vector<Rational>() : parse_rationals(direction_text);
        if (e.empty()) {
          // e = (0, 1, ..., 1)
          e.assign(static_cast<std::size_t>(f.nvars()), Rational(1));
          if (!e.empty()) e[0] = 0;
        }
        v = hyperbolic_in_direction(f, e, cfg.trials, cfg.seed);
      }
      Json doc = header("stable check");
      doc["mode"] = stable_mode;
      doc["verdict"] = to_json(v);
      emit(out, doc, cfg);
      return v.status == StabilityStatus::CertifiedUnstable ? 1 : 0;
    }
    if (verify_cmd->parsed()) {
      const auto claim = claim_from_string(claim_text);
      if (!claim) throw UsageError("unknown claim '" + claim_text + "'");
      const auto reports = verify_batch(*claim, BatchOptions{cfg.instances, cfg.seed, cfg.order, 0});
      Json doc = header("verify");
      doc["claim"] = to_string(*claim);
      doc["seed"] = cfg.seed;
      doc["instances"] = cfg.instances;
      doc["order"] = cfg.order;
      int failed = 0;
      Json arr = Json::array();
      for (const auto& r : reports) {
        if (!r.passed()) ++failed;
        arr.push_back(to_json(r));
      }
      doc["passed"] = static_cast<int>(reports.size()) - failed;
      doc["failed"] = failed;
      doc["reports"] = std::move(arr);
      emit(out, doc, cfg);
      return failed == 0 ? 0 : 1;
    }
    if (inertia_cmd->parsed()) {
      require_exact(cfg, "inertia");
      auto in = parse_input(file_a);
      UniPoly p;
      Json doc = header("inertia");
      if (auto* m = std::get_if<HermitianMatrix>(&in)) {
        p = characteristic_polynomial(*m);
        doc["source"] = "characteristic polynomial";
      } else if (auto* u = std::get_if<UniPoly>(&in)) {
        p = *u;
        doc["source"] = "polynomial";
      } else {
        throw std::invalid_argument(file_a + ": expected a univariate polynomial or a matrix");
      }
      if (!p.is_zero() && !is_hyperbolic(p)) {
        doc["polynomial"] = to_json(p);
        doc["hyperbolic"] = false;
        doc["inertia"] = nullptr;
        emit(out, doc, cfg);
        return 1;
      }
      doc["polynomial"] = to_json(p);
      doc["hyperbolic"] = true;
      doc["inertia"] = to_json(inertia(p));
      emit(out, doc, cfg);
      return 0;
    }
    if (interlace_cmd->parsed()) {
      require_exact(cfg, "interlace");
      const UniPoly p = load_unipoly(file_a), q = load_unipoly(file_b);
      Json doc = header("interlace");
      doc["p"] = to_json(p);
      doc["q"] = to_json(q);
      bool ok = false;
      try {
        ok = interlaces(p, q);
      } catch (const std::domain_error& e) {
        doc["reason"] = e.what();
      }
      doc["interlaces"] = ok;
      emit(out, doc, cfg);
      return ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace mixeddet::cli
