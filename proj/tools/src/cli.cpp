#include "gpres/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iomanip>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "gpres/condition_r.hpp"
#include "gpres/construct.hpp"
#include "gpres/equations.hpp"
#include "gpres/finite_group.hpp"
#include "gpres/presentation.hpp"
#include "gpres/solver.hpp"

#ifndef GPRES_VERSION
#define GPRES_VERSION "0.0.0"
#endif

namespace gpres::cli {

  namespace {

    // Thrown for flag combinations CLI11 cannot express.
    struct UsageError : Error {
      using Error::Error;
    };

    int verdict_exit(Verdict const& v) {
      switch (v.value) {
        case VerdictValue::Trivial:
          return kSuccess;
        case VerdictValue::Nontrivial:
          return kFailure;
        case VerdictValue::Unknown:
          break;
      }
      return kUnknown;
    }

    std::optional<std::size_t> env_budget() {
      char const* s = std::getenv("GPRES_BUDGET");
      if (s == nullptr || *s == '\0') {
        return std::nullopt;
      }
      std::size_t value = 0;
      auto const  text  = std::string_view(s);
      auto const [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError("GPRES_BUDGET is not a node count: " + std::string(text));
      }
      return value;
    }

    struct Globals {
      bool                       no_banner = false;
      std::optional<std::size_t> budget;

      SolverConfig solver_config(GradedPresentation const& p) const {
        auto cfg = SolverConfig::for_presentation(p);
        if (auto b = budget ? budget : env_budget()) {
          cfg.node_budget = *b;
        }
        return cfg;
      }
      SolverConfig solver_config(Rational alpha) const {
        SolverConfig cfg;
        cfg.alpha = alpha;
        if (auto b = budget ? budget : env_budget()) {
          cfg.node_budget = *b;
        }
        return cfg;
      }
    };

    std::string read_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw ParseError("cannot open " + path);
      }
      std::ostringstream s;
      s << in.rdbuf();
      return s.str();
    }

    void write_file(std::string const& path, std::string const& text) {
      std::ofstream out(path, std::ios::binary);
      if (!out || !(out << text)) {
        throw UsageError("cannot write " + path);
      }
    }

    // One word per line, `#` comments.
    std::vector<Word> load_word_list(Alphabet const& ab, std::string const& path) {
      std::istringstream in(read_file(path));
      std::vector<Word>  out;
      std::string        line;
      std::size_t        lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        line = line.substr(0, line.find('#'));
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
          continue;
        }
        try {
          out.push_back(ab.parse(line));
        } catch (ParseError const& e) {
          throw ParseError(path + ": line " + std::to_string(lineno) + ": " + e.what());
        }
      }
      return out;
    }

    // --- build -------------------------------------------------------------

    struct BuildArgs {
      std::string                alpha = "3/10";
      int                        h     = 4;
      int                        d     = 8;
      int                        n     = 256;
      int                        max_rank = 3;
      std::optional<std::size_t> z_radius;
      std::optional<std::string> z_list;
      std::string                mode = "exhaustive";
      std::optional<std::string> periods;
      std::string                output;
      std::optional<std::string> log;
    };

    int cmd_build(BuildArgs const& a, Globals const& g, std::ostream& out) {
      Params params;
      params.alpha = Rational::parse(a.alpha);
      params.h     = a.h;
      params.d     = a.d;
      params.n     = a.n;
      params.validate();
      Alphabet const ab(params.h);

      if (a.mode == "targeted" && !a.periods) {
        throw UsageError("--mode targeted needs --periods");
      }
      if (a.mode == "exhaustive" && a.periods) {
        throw UsageError("--periods only applies to --mode targeted");
      }
      ZPool const pool = a.z_list ? ZPool::explicit_words(load_word_list(ab, *a.z_list))
                                  : ZPool::ball(a.z_radius.value_or(1));

      BuildConfig cfg;
      cfg.solver = g.solver_config(params.alpha);
      if (a.periods) {
        cfg.targeted = load_period_pool(ab, *a.periods);
      }

      BuildLog   log;
      auto const p = build(params, a.max_rank, pool, cfg, &log);
      for (auto const& w : params.warnings()) {
        log.add("warning: " + w);
      }
      write_file(a.output, serialize(p));
      auto const log_path = a.log.value_or(a.output + ".log");
      write_file(log_path, log.str());

      out << "wrote " << a.output << " built_rank=" << p.built_rank() << "\n";
      for (int i = 1; i <= p.built_rank(); ++i) {
        auto const& layer = p.layer(i);
        out << "rank " << i << " periods=" << layer.periods.size()
            << " relators=" << layer.relators.size() << "\n";
      }
      out << "log " << log_path << " lines=" << log.lines.size() << "\n";
      return kSuccess;
    }

    // --- check-r -----------------------------------------------------------

    int cmd_check_r(std::string const& file, Globals const& g, std::ostream& out) {
      auto const p      = load_presentation(file);
      auto const report = check_presentation(p, g.solver_config(p));
      out << report.format(p);
      if (report.any_fail()) {
        return kFailure;
      }
      return report.any_unknown() ? kUnknown : kSuccess;
    }

    // --- wp / conj ---------------------------------------------------------

    struct WordArgs {
      std::string                file;
      std::vector<std::string>   words;
      std::optional<std::string> eq_const;
      std::optional<int>         rank;
    };

    int rank_of(GradedPresentation const& p, std::optional<int> rank) {
      int const r = rank.value_or(p.built_rank());
      if (r < 0 || r > p.built_rank()) {
        throw UsageError("--rank " + std::to_string(r) + " outside 0.." +
                         std::to_string(p.built_rank()));
      }
      return r;
    }

    void print_verdict(std::ostream& out, Solver const& solver, Word const& w,
                       Verdict const& v) {
      auto const& ab = solver.presentation().alphabet();
      out << format_verdict(ab, v) << "\n";
      if (!v.unknown()) {
        out << "check=" << (solver.verify(w, v) ? "ok" : "failed") << "\n";
      }
    }

    int cmd_wp(WordArgs const& a, Globals const& g, std::ostream& out) {
      auto const p  = load_presentation(a.file);
      auto const& ab = p.alphabet();
      Word        w;
      if (a.eq_const) {
        if (!a.words.empty()) {
          throw UsageError("give either a word or --eq-const");
        }
        auto const eq = *a.eq_const == "v" ? make_v(p.params()) : make_w(p.params());
        w = substitute(eq, Word{});
        out << "word=" << *a.eq_const << "(1)";
      } else {
        if (a.words.size() != 1) {
          throw UsageError("wp takes exactly one word");
        }
        w = ab.parse(a.words[0]);
        out << "word=\"" << ab.format(w) << "\"";
      }
      Solver const solver(p, rank_of(p, a.rank), g.solver_config(p));
      out << " length=" << w.size() << " rank=" << solver.rank() << "\n";
      auto const v = solver.is_identity(w);
      print_verdict(out, solver, w, v);
      return verdict_exit(v);
    }

    int cmd_conj(WordArgs const& a, Globals const& g, std::ostream& out) {
      if (a.words.size() != 2) {
        throw UsageError("conj takes exactly two words");
      }
      auto const   p = load_presentation(a.file);
      Word const   x = p.alphabet().parse(a.words[0]);
      Word const   y = p.alphabet().parse(a.words[1]);
      Solver const solver(p, rank_of(p, a.rank), g.solver_config(p));
      auto const   v = solver.are_conjugate(x, y);
      out << "rank=" << solver.rank() << "\n" << format_verdict(p.alphabet(), v) << "\n";
      return verdict_exit(v);
    }

    // --- eq ----------------------------------------------------------------

    struct EqArgs {
      std::string                file;
      std::vector<std::string>   eq;
      std::optional<std::string> at;
      std::optional<std::size_t> census_radius;
      bool                       dedup = false;
    };

    Equation select_equation(GradedPresentation const& p, std::vector<std::string> const& eq) {
      auto const& kind = eq.at(0);
      if (kind == "custom") {
        if (eq.size() != 2) {
          throw UsageError("--eq custom needs a file");
        }
        return load_equation(p.alphabet(), eq[1]);
      }
      if (eq.size() != 1) {
        throw UsageError("only --eq custom takes a file");
      }
      return kind == "star" ? make_v(p.params()) : make_w(p.params());
    }

    int cmd_eq(EqArgs const& a, Globals const& g, std::ostream& out) {
      if (a.at.has_value() == a.census_radius.has_value()) {
        throw UsageError("give exactly one of --at and --census");
      }
      auto const p   = load_presentation(a.file);
      auto const eq  = select_equation(p, a.eq);
      auto const cfg = g.solver_config(p);
      out << "equation=" << a.eq[0] << " length=" << eq.word().size()
          << " x_sum=" << x_exponent_sum(eq) << "\n";
      if (a.at) {
        Word const   x = p.alphabet().parse(*a.at);
        Word const   w = substitute(eq, x);
        Solver const solver(p, p.built_rank(), cfg);
        out << "at=\"" << p.alphabet().format(x) << "\" substituted_length=" << w.size() << "\n";
        auto const v = solver.is_identity(w);
        print_verdict(out, solver, w, v);
        return verdict_exit(v);
      }
      auto const report = census(p, eq, *a.census_radius, cfg, a.dedup);
      out << report.format();
      return report.unknowns() > 0 ? kUnknown : kSuccess;
    }

    // --- demo-theorem1 -----------------------------------------------------

    struct DemoArgs {
      std::string                kind;
      std::optional<std::string> a_file, b_file, a_elem;
      std::size_t                radius = 3;
      std::optional<std::string> h_file, k_file, eq_file;
    };

    std::string require(std::optional<std::string> const& v, char const* flag) {
      if (!v) {
        throw UsageError(std::string(flag) + " is required for this case");
      }
      return *v;
    }

    int print_match(std::ostream& out, CensusReport const& report,
                    std::set<std::string> const& expected) {
      auto const got = report.elements(VerdictValue::Trivial);
      bool const match = report.unknowns() == 0 &&
                         std::set<std::string>(got.begin(), got.end()) == expected;
      out << "expected solutions=" << expected.size() << " observed solutions="
          << report.solutions() << " non_solutions=" << report.non_solutions()
          << " unknown=" << report.unknowns() << "\n"
          << "match=" << (match ? "yes" : "no") << "\n";
      return match ? kSuccess : kFailure;
    }

    int demo_free(DemoArgs const& a, std::ostream& out) {
      auto const grp_a = load_finite_group(require(a.a_file, "--A"));
      auto const grp_b = load_finite_group(require(a.b_file, "--B"));
      std::size_t elem = grp_a.identity() == 0 ? 1 : 0;
      if (a.a_elem) {
        elem = grp_a.element(*a.a_elem);
      }
      if (grp_a.order() < 2) {
        throw UsageError("A must be nontrivial");
      }
      auto const report = theorem1_free_census(grp_a, grp_b, elem, a.radius);
      out << "case=free |A|=" << grp_a.order() << " |B|=" << grp_b.order()
          << " a=" << grp_a.name(elem) << " radius=" << a.radius << "\n"
          << report.format();

      // Prediction: the centralizer of a is the embedded copy of A.
      std::set<std::string> expected;
      for (std::size_t x = 0; x < grp_a.order(); ++x) {
        FreeProductElement e;
        if (x != grp_a.identity() && a.radius > 0) {
          e.syllables.push_back({Factor::A, x});
        } else if (x != grp_a.identity()) {
          continue;
        }
        expected.insert(format(grp_a, grp_b, e));
      }
      return print_match(out, report, expected);
    }

    int demo_direct(DemoArgs const& a, std::ostream& out) {
      auto const grp_h = load_finite_group(require(a.h_file, "--H"));
      auto const grp_k = load_finite_group(require(a.k_file, "--K"));
      auto const eq    = load_finite_equation(grp_h, require(a.eq_file, "--eq"));
      auto const report = direct_product_census(grp_h, eq, grp_k);
      out << "case=direct |H|=" << grp_h.order() << " |K|=" << grp_k.order()
          << " x_sum=" << x_exponent_sum(eq) << "\n"
          << report.format();

      // Brute force in H x K, multiplying pairs letter by letter.
      std::set<std::string> expected;
      for (std::size_t h = 0; h < grp_h.order(); ++h) {
        for (std::size_t k = 0; k < grp_k.order(); ++k) {
          std::size_t vh = grp_h.identity();
          std::size_t vk = grp_k.identity();
          for (auto const& t : eq.tokens) {
            std::size_t th = t.is_x ? h : t.element;
            std::size_t tk = t.is_x ? k : grp_k.identity();
            if (t.inverse) {
              th = grp_h.inverse(th);
              tk = grp_k.inverse(tk);
            }
            vh = grp_h.mul(vh, th);
            vk = grp_k.mul(vk, tk);
          }
          if (vh == grp_h.identity() && vk == grp_k.identity()) {
            expected.insert("(" + grp_h.name(h) + "," + grp_k.name(k) + ")");
          }
        }
      }
      return print_match(out, report, expected);
    }

    std::string banner() {
      std::time_t const now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
      std::tm           utc{};
      gmtime_r(&now, &utc);
      std::ostringstream s;
      s << "# gpres " << GPRES_VERSION << " " << std::put_time(&utc, "%FT%TZ") << "\n";
      return s.str();
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graded presentations, condition R and equations over groups", "gpres"};
    app.require_subcommand(1);
    app.fallthrough();
    // `-h` would collide with the --h parameter.
    app.set_help_flag("--help", "Print this help message and exit");

    Globals g;
    app.add_flag("--no-banner", g.no_banner, "Omit the timestamped first line");
    app.add_option("--budget", g.budget, "Solver node budget (overrides GPRES_BUDGET)");

    BuildArgs ba;
    auto* build_cmd = app.add_subcommand("build", "Build a graded presentation rank by rank");
    build_cmd->add_option("--alpha", ba.alpha, "alpha as p/q")->capture_default_str();
    build_cmd->add_option("--h", ba.h, "Number of c-generators (even)")->capture_default_str();
    build_cmd->add_option("--d", ba.d)->capture_default_str();
    build_cmd->add_option("--n", ba.n)->capture_default_str();
    build_cmd->add_option("--max-rank", ba.max_rank)->capture_default_str();
    auto* zr = build_cmd->add_option("--z-radius", ba.z_radius, "Z pool: reduced words up to this length (default 1)");
    auto* zl = build_cmd->add_option("--z-list", ba.z_list, "Z pool: one word per line");
    zr->excludes(zl);
    build_cmd->add_option("--mode", ba.mode)
        ->check(CLI::IsMember({"exhaustive", "targeted"}))
        ->capture_default_str();
    build_cmd->add_option("--periods", ba.periods, "Candidate periods for --mode targeted");
    build_cmd->add_option("-o,--output", ba.output, "Presentation file to write")->required();
    build_cmd->add_option("--log", ba.log, "Build log (default OUTPUT.log)");

    std::string check_file;
    auto* check_cmd = app.add_subcommand("check-r", "Check condition R clause by clause");
    check_cmd->add_option("file", check_file)->required();

    WordArgs wa;
    auto* wp_cmd = app.add_subcommand("wp", "Word problem: is WORD trivial?");
    wp_cmd->add_option("file", wa.file)->required();
    wp_cmd->add_option("word", wa.words);
    wp_cmd->add_option("--eq-const", wa.eq_const, "Use v(1) or w(1) as the word")
        ->check(CLI::IsMember({"v", "w"}));
    wp_cmd->add_option("--rank", wa.rank);

    WordArgs ca;
    auto* conj_cmd = app.add_subcommand("conj", "Conjugacy problem for two words");
    conj_cmd->add_option("file", ca.file)->required();
    conj_cmd->add_option("words", ca.words)->expected(2);
    conj_cmd->add_option("--rank", ca.rank);

    EqArgs ea;
    auto* eq_cmd = app.add_subcommand("eq", "Evaluate an equation at a point or over a ball");
    eq_cmd->add_option("file", ea.file)->required();
    eq_cmd->add_option("--eq", ea.eq, "star | main | custom FILE")
        ->required()
        ->expected(1, 2)
        ->check(CLI::IsMember({"star", "main", "custom"}).application_index(0));
    eq_cmd->add_option("--at", ea.at);
    eq_cmd->add_option("--census", ea.census_radius);
    eq_cmd->add_flag("--dedup", ea.dedup, "Skip words certified equal to earlier ones");

    DemoArgs da;
    auto* demo_cmd = app.add_subcommand("demo-theorem1", "Exact solution counts in free and direct products");
    demo_cmd->add_option("--case", da.kind)->required()->check(CLI::IsMember({"free", "direct"}));
    demo_cmd->add_option("--A", da.a_file);
    demo_cmd->add_option("--B", da.b_file);
    demo_cmd->add_option("--a", da.a_elem, "Element of A (default: first non-identity)");
    demo_cmd->add_option("--radius", da.radius)->capture_default_str();
    demo_cmd->add_option("--H", da.h_file);
    demo_cmd->add_option("--K", da.k_file);
    demo_cmd->add_option("--eq", da.eq_file);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kSuccess : kUsage;
    }

    if (!g.no_banner) {
      out << banner();
    }
    try {
      if (*build_cmd) {
        return cmd_build(ba, g, out);
      }
      if (*check_cmd) {
        return cmd_check_r(check_file, g, out);
      }
      if (*wp_cmd) {
        return cmd_wp(wa, g, out);
      }
      if (*conj_cmd) {
        return cmd_conj(ca, g, out);
      }
      if (*eq_cmd) {
        return cmd_eq(ea, g, out);
      }
      if (da.kind == "free") {
        return demo_free(da, out);
      }
      return demo_direct(da, out);
    } catch (Error const& e) {
      err << "gpres: " << e.what() << "\n";
      return kUsage;
    }
  }

}  // namespace gpres::cli
