#include "gpres/finite_group.hpp"

#include <fstream>
#include <sstream>

namespace gpres {

  FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table,
                           std::vector<std::string>              names)
      : table_(std::move(table)), names_(std::move(names)) {
    auto const n = table_.size();
    if (n == 0) {
      throw Error("finite group: empty table");
    }
    for (auto const& row : table_) {
      if (row.size() != n) {
        throw Error("finite group: table is not square");
      }
      std::vector<bool> seen(n, false);
      for (auto e : row) {
        if (e >= n || seen[e]) {
          throw Error("finite group: rows must be permutations of 0.." + std::to_string(n - 1));
        }
        seen[e] = true;
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<bool> seen(n, false);
      for (std::size_t r = 0; r < n; ++r) {
        if (seen[table_[r][c]]) {
          throw Error("finite group: column " + std::to_string(c) + " repeats an element");
        }
        seen[table_[r][c]] = true;
      }
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        ok = table_[e][x] == x && table_[x][e] == x;
      }
      if (ok) {
        identity_ = e;
        found     = true;
      }
    }
    if (!found) {
      throw Error("finite group: no identity element");
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        abelian_ = abelian_ && table_[x][y] == table_[y][x];
        for (std::size_t z = 0; z < n; ++z) {
          if (table_[table_[x][y]][z] != table_[x][table_[y][z]]) {
            throw Error("finite group: not associative at (" + std::to_string(x) + ","
                        + std::to_string(y) + "," + std::to_string(z) + ")");
          }
        }
      }
    }
    inverse_.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (table_[x][y] == identity_) {
          inverse_[x] = y;
        }
      }
    }
    if (names_.empty()) {
      for (std::size_t x = 0; x < n; ++x) {
        names_.push_back(std::to_string(x));
      }
    }
    if (names_.size() != n) {
      throw Error("finite group: expected " + std::to_string(n) + " names");
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (names_[x] == names_[y]) {
          throw Error("finite group: duplicate name " + names_[x]);
        }
      }
    }
  }

  std::size_t FiniteGroup::element(std::string_view name) const {
    for (std::size_t x = 0; x < names_.size(); ++x) {
      if (names_[x] == name) {
        return x;
      }
    }
    throw ParseError("unknown group element " + std::string(name));
  }

  FiniteGroup parse_finite_group(std::string_view text) {
    std::istringstream                    in{std::string(text)};
    std::string                           line;
    std::size_t                           order = 0;
    std::vector<std::string>              names;
    std::vector<std::vector<std::size_t>> rows;
    int                                   no = 0;
    auto fail = [&](std::string const& msg) {
      throw ParseError("line " + std::to_string(no) + ": " + msg);
    };
    while (std::getline(in, line)) {
      ++no;
      line = line.substr(0, line.find('#'));
      std::istringstream ls(line);
      std::string        head;
      if (!(ls >> head)) {
        continue;
      }
      if (head == "order") {
        if (order != 0 || !(ls >> order) || order == 0) {
          fail("bad order line");
        }
      } else if (head == "names") {
        if (order == 0 || !names.empty()) {
          fail("names must follow the order line once");
        }
        std::string nm;
        while (ls >> nm) {
          names.push_back(nm);
        }
      } else {
        if (order == 0) {
          fail("table row before the order line");
        }
        std::istringstream rs(line);
        std::vector<std::size_t> row;
        std::string tok;
        while (rs >> tok) {
          std::size_t used = 0;
          std::size_t v    = 0;
          try {
            v = std::stoul(tok, &used);
          } catch (std::logic_error const&) {
            fail("bad table entry " + tok);
          }
          if (used != tok.size()) {
            fail("bad table entry " + tok);
          }
          row.push_back(v);
        }
        rows.push_back(std::move(row));
      }
    }
    if (order == 0) {
      throw ParseError("missing order line");
    }
    if (rows.size() != order) {
      throw ParseError("expected " + std::to_string(order) + " rows, got "
                       + std::to_string(rows.size()));
    }
    try {
      return FiniteGroup(std::move(rows), std::move(names));
    } catch (ParseError const&) {
      throw;
    } catch (Error const& e) {
      throw ParseError(e.what());
    }
  }

  FiniteGroup load_finite_group(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_finite_group(ss.str());
  }

  namespace {
    FiniteGroup const& factor(FiniteGroup const& a, FiniteGroup const& b, Factor f) {
      return f == Factor::A ? a : b;
    }
  }  // namespace

  FreeProductElement free_product_mul(FiniteGroup const& a, FiniteGroup const& b,
                                      FreeProductElement const& x,
                                      FreeProductElement const& y) {
    FreeProductElement out = x;
    auto&              s   = out.syllables;
    for (auto const& syl : y.syllables) {
      if (!s.empty() && s.back().factor == syl.factor) {
        auto const& g = factor(a, b, syl.factor);
        auto const  m = g.mul(s.back().element, syl.element);
        if (m == g.identity()) {
          s.pop_back();
        } else {
          s.back().element = m;
        }
      } else {
        s.push_back(syl);
      }
    }
    return out;
  }

  FreeProductElement free_product_inverse(FiniteGroup const& a, FiniteGroup const& b,
                                          FreeProductElement const& x) {
    FreeProductElement out;
    for (auto it = x.syllables.rbegin(); it != x.syllables.rend(); ++it) {
      out.syllables.push_back({it->factor, factor(a, b, it->factor).inverse(it->element)});
    }
    return out;
  }

  std::vector<FreeProductElement> normal_forms(FiniteGroup const& a, FiniteGroup const& b,
                                               std::size_t radius) {
    std::vector<FreeProductElement> out{FreeProductElement{}};
    std::size_t                     begin = 0;
    for (std::size_t len = 1; len <= radius; ++len) {
      std::size_t const end = out.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (Factor f : {Factor::A, Factor::B}) {
          if (!out[i].syllables.empty() && out[i].syllables.back().factor == f) {
            continue;
          }
          auto const& g = factor(a, b, f);
          for (std::size_t e = 0; e < g.order(); ++e) {
            if (e == g.identity()) {
              continue;
            }
            FreeProductElement next = out[i];
            next.syllables.push_back({f, e});
            out.push_back(std::move(next));
          }
        }
      }
      begin = end;
    }
    return out;
  }

  std::string format(FiniteGroup const& a, FiniteGroup const& b, FreeProductElement const& x) {
    if (x.syllables.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& s : x.syllables) {
      if (!out.empty()) {
        out += ' ';
      }
      out += (s.factor == Factor::A ? "A:" : "B:") + factor(a, b, s.factor).name(s.element);
    }
    return out;
  }

  CensusReport theorem1_free_census(FiniteGroup const& a, FiniteGroup const& b,
                                    std::size_t a_elem, std::size_t radius) {
    if (!a.is_abelian()) {
      throw Error("theorem1_free_census: A must be abelian");
    }
    if (a_elem >= a.order() || a_elem == a.identity()) {
      throw Error("theorem1_free_census: a must be a nonidentity element of A");
    }
    FreeProductElement const fa{{{Factor::A, a_elem}}};
    CensusReport             out;
    out.radius = radius;
    for (auto const& g : normal_forms(a, b, radius)) {
      bool const commute = free_product_mul(a, b, g, fa) == free_product_mul(a, b, fa, g);
      out.entries.push_back({format(a, b, g),
                             commute ? VerdictValue::Trivial : VerdictValue::Nontrivial,
                             Obstruction::None, {}});
    }
    return out;
  }

  FiniteEquation parse_finite_equation(FiniteGroup const& g, std::string_view text) {
    FiniteEquation     eq;
    std::istringstream in{std::string(text)};
    std::string        tok;
    while (in >> tok) {
      bool const inv  = tok.size() > 1 && tok.back() == '\'';
      std::string const base = inv ? tok.substr(0, tok.size() - 1) : tok;
      if (base == "x") {
        eq.tokens.push_back({true, 0, inv});
      } else {
        eq.tokens.push_back({false, g.element(base), inv});
      }
    }
    return eq;
  }

  FiniteEquation load_finite_equation(FiniteGroup const& g, std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open " + path);
    }
    std::string text;
    std::string line;
    while (std::getline(in, line)) {
      text += line.substr(0, line.find('#'));
      text += ' ';
    }
    return parse_finite_equation(g, text);
  }

  long long x_exponent_sum(FiniteEquation const& eq) {
    long long s = 0;
    for (auto const& t : eq.tokens) {
      if (t.is_x) {
        s += t.inverse ? -1 : 1;
      }
    }
    return s;
  }

  std::size_t evaluate(FiniteGroup const& g, FiniteEquation const& eq, std::size_t h) {
    std::size_t acc = g.identity();
    for (auto const& t : eq.tokens) {
      std::size_t const e = t.is_x ? h : t.element;
      acc = g.mul(acc, t.inverse ? g.inverse(e) : e);
    }
    return acc;
  }

  namespace {
    std::size_t power(FiniteGroup const& g, std::size_t k, long long e) {
      std::size_t const base = e < 0 ? g.inverse(k) : k;
      std::size_t       acc  = g.identity();
      for (long long i = 0; i < (e < 0 ? -e : e); ++i) {
        acc = g.mul(acc, base);
      }
      return acc;
    }

    Verdict k_side(FiniteGroup const& k_group, std::size_t k, long long xsum) {
      Verdict v;
      if (power(k_group, k, xsum) != k_group.identity()) {
        v.value          = VerdictValue::Nontrivial;
        v.obstruction    = Obstruction::FiniteQuotient;
        v.quotient_order = k_group.order();
        v.reason         = "K coordinate is not the identity";
      }
      return v;
    }
  }  // namespace

  Verdict direct_product_eval(FiniteGroup const& h_group, FiniteEquation const& eq,
                              std::size_t h, FiniteGroup const& k_group, std::size_t k) {
    if (h >= h_group.order() || k >= k_group.order()) {
      throw Error("direct_product_eval: element out of range");
    }
    auto v = k_side(k_group, k, x_exponent_sum(eq));
    if (v.nontrivial()) {
      return v;
    }
    if (evaluate(h_group, eq, h) == h_group.identity()) {
      v.value = VerdictValue::Trivial;
    } else {
      v.value          = VerdictValue::Nontrivial;
      v.obstruction    = Obstruction::FiniteQuotient;
      v.quotient_order = h_group.order();
    }
    return v;
  }

  Verdict direct_product_eval(GradedPresentation const& h_group, Equation const& eq,
                              Word const& h, FiniteGroup const& k_group, std::size_t k,
                              SolverConfig const& cfg) {
    if (!(eq.alphabet() == h_group.alphabet())) {
      throw Error("direct_product_eval: constants outside the H alphabet");
    }
    if (k >= k_group.order()) {
      throw Error("direct_product_eval: element out of range");
    }
    auto v = k_side(k_group, k, x_exponent_sum(eq));
    if (v.nontrivial()) {
      return v;
    }
    return eval_at(h_group, eq, h, cfg);
  }

  CensusReport direct_product_census(FiniteGroup const& h_group, FiniteEquation const& eq,
                                     FiniteGroup const& k_group) {
    CensusReport out;
    for (std::size_t h = 0; h < h_group.order(); ++h) {
      for (std::size_t k = 0; k < k_group.order(); ++k) {
        auto const v = direct_product_eval(h_group, eq, h, k_group, k);
        out.entries.push_back({"(" + h_group.name(h) + "," + k_group.name(k) + ")", v.value,
                               v.obstruction, {}});
      }
    }
    return out;
  }

}  // namespace gpres
