#include "gpres/equations.hpp"

#include <fstream>
#include <sstream>

namespace gpres {

  namespace {
    bool is_x(Alphabet const& ab, Letter l) { return l.gen() == ab.size(); }

    // Replaces every x^(+-1) in `word` by `g`^(+-1), then reduces.
    Word replace_x(Alphabet const& ab, Word const& word, Word const& g) {
      Word const          gi = invert(g);
      std::vector<Letter> raw;
      raw.reserve(word.size() * std::max<std::size_t>(1, g.size()));
      for (Letter l : word) {
        if (!is_x(ab, l)) {
          raw.push_back(l);
          continue;
        }
        auto const& r = l.is_inverse() ? gi : g;
        raw.insert(raw.end(), r.begin(), r.end());
      }
      return Word::reduce(raw);
    }

    void check_extended(Alphabet const& ab, Word const& w) {
      for (Letter l : w) {
        if (l.gen() > ab.size()) {
          throw Error("equation letter outside the alphabet");
        }
      }
    }
  }  // namespace

  Equation::Equation(Alphabet alphabet, Word word)
      : alphabet_(std::move(alphabet)), word_(std::move(word)) {
    check_extended(alphabet_, word_);
  }

  Letter x_letter(Alphabet const& alphabet, bool inverse) {
    return Letter(static_cast<Gen>(alphabet.size()), inverse);
  }

  std::string Equation::format() const {
    if (word_.empty()) {
      return "1";
    }
    std::string out;
    for (Letter l : word_) {
      if (!out.empty()) {
        out += ' ';
      }
      out += is_x(alphabet_, l) ? (l.is_inverse() ? "x'" : "x") : alphabet_.format(l);
    }
    return out;
  }

  Equation parse_equation(Alphabet const& alphabet, std::string_view text) {
    std::istringstream  in{std::string(text)};
    std::string         tok;
    std::vector<Letter> raw;
    while (in >> tok) {
      if (tok == "x" || tok == "x'") {
        raw.push_back(x_letter(alphabet, tok.size() == 2));
      } else if (tok != "1") {
        raw.push_back(alphabet.parse_letter(tok));
      }
    }
    return Equation(alphabet, Word::reduce(raw));
  }

  Equation load_equation(Alphabet const& alphabet, std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open " + path);
    }
    std::string text;
    std::string line;
    while (std::getline(in, line)) {
      auto const hash = line.find('#');
      text += line.substr(0, hash);
      text += ' ';
    }
    return parse_equation(alphabet, text);
  }

  Equation concat(Equation const& e1, Equation const& e2) {
    if (!(e1.alphabet() == e2.alphabet())) {
      throw Error("equations over different alphabets");
    }
    return Equation(e1.alphabet(), concat(e1.word(), e2.word()));
  }

  Word substitute(Equation const& eq, Word const& g) {
    eq.alphabet().check(g.letters());
    return replace_x(eq.alphabet(), eq.word(), g);
  }

  Equation substitute(Equation const& eq, Equation const& g) {
    if (!(eq.alphabet() == g.alphabet())) {
      throw Error("equations over different alphabets");
    }
    return Equation(eq.alphabet(), replace_x(eq.alphabet(), eq.word(), g.word()));
  }

  long long x_exponent_sum(Equation const& eq) {
    long long s = 0;
    for (Letter l : eq.word()) {
      if (is_x(eq.alphabet(), l)) {
        s += l.sign();
      }
    }
    return s;
  }

  Equation make_v(Params const& params) {
    params.validate();
    Alphabet const ab(params.h);
    Letter const   x  = x_letter(ab);
    Word const     base =
        Word::reduce(std::vector<Letter>{x.inverse(), Letter(Alphabet::a(), false), x,
                                         Letter(Alphabet::b(), false)});
    std::vector<Letter> raw;
    for (int j = 1; j <= params.h; ++j) {
      raw.emplace_back(ab.c(j), false);
      Word const pw = Word::power(base, j % 2 == 0 ? params.n : -static_cast<long long>(params.n));
      raw.insert(raw.end(), pw.begin(), pw.end());
    }
    return Equation(ab, Word::reduce(raw));
  }

  Equation make_w(Params const& params) {
    Equation const v  = make_v(params);
    auto const&    ab = v.alphabet();
    auto commutator = [](Word const& p, Word const& q) {
      return concat({invert(p), invert(q), p, q});
    };
    Word const x = Word::letter(x_letter(ab));
    Word const a = Word::letter(Letter(Alphabet::a(), false));
    Word const b = Word::letter(Letter(Alphabet::b(), false));
    Word const c1 = Word::letter(Letter(ab.c(1), false));
    Word const va = substitute(v, Equation(ab, commutator(a, x))).word();
    Word const vb = substitute(v, Equation(ab, commutator(b, x))).word();
    return Equation(ab, commutator(concat({c1, va, invert(c1)}), vb));
  }

  Verdict eval_at(GradedPresentation const& p, Equation const& eq, Word const& g,
                  SolverConfig const& cfg) {
    if (!(eq.alphabet() == p.alphabet())) {
      throw Error("equation and presentation use different alphabets");
    }
    return is_identity(p, p.built_rank(), substitute(eq, g), cfg);
  }

  std::size_t CensusReport::count(VerdictValue v) const {
    std::size_t c = 0;
    for (auto const& e : entries) {
      c += e.verdict == v;
    }
    return c;
  }

  std::vector<std::string> CensusReport::elements(VerdictValue v) const {
    std::vector<std::string> out;
    for (auto const& e : entries) {
      if (e.verdict == v) {
        out.push_back(e.element);
      }
    }
    return out;
  }

  std::string CensusReport::format() const {
    std::ostringstream out;
    for (auto const& e : entries) {
      out << e.element << " verdict=" << to_string(e.verdict)
          << " obstruction=" << to_string(e.obstruction);
      if (!e.note.empty()) {
        out << " note=\"" << e.note << "\"";
      }
      out << "\n";
    }
    out << "census radius=" << radius << " elements=" << entries.size()
        << " solutions=" << solutions() << " non_solutions=" << non_solutions()
        << " unknown=" << unknowns() << "\n";
    return out.str();
  }

  CensusReport census(GradedPresentation const& p, Equation const& eq,
                      std::size_t radius, SolverConfig const& cfg, bool dedup) {
    auto const&       ab = p.alphabet();
    Solver const      solver(p, p.built_rank(), cfg);
    CensusReport      out;
    std::vector<Word> reps;
    out.radius = radius;
    for (auto const& g : ball(ab, radius)) {
      if (dedup) {
        bool seen = false;
        for (auto const& r : reps) {
          if (solver.is_identity(concat(invert(r), g)).trivial()) {
            seen = true;
            break;
          }
        }
        if (seen) {
          continue;
        }
        reps.push_back(g);
      }
      if (!(eq.alphabet() == ab)) {
        throw Error("equation and presentation use different alphabets");
      }
      auto const v = solver.is_identity(substitute(eq, g));
      out.entries.push_back({ab.format(g), v.value, v.obstruction, v.reason});
    }
    return out;
  }

}  // namespace gpres
