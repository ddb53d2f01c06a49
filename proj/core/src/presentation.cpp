#include "gpres/presentation.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace gpres {

  ////////////////////////////////////////////////////////////////////////
  // Params
  ////////////////////////////////////////////////////////////////////////

  void Params::validate() const {
    if (!(alpha > Rational(0) && alpha < Rational(1, 2))) {
      throw Error("params: alpha must lie in (0, 1/2), got " + alpha.str());
    }
    if (h < 2 || h % 2 != 0) {
      throw Error("params: h must be an even integer >= 2, got "
                  + std::to_string(h));
    }
    if (d < 2) {
      throw Error("params: d must be >= 2, got " + std::to_string(d));
    }
    if (n <= d) {
      throw Error("params: n must exceed d (n = " + std::to_string(n)
                  + ", d = " + std::to_string(d) + ")");
    }
  }

  std::vector<std::string> Params::warnings() const {
    std::vector<std::string> out;
    if (alpha.inverse() >= Rational(h)) {
      out.push_back("1/alpha = " + alpha.inverse().str()
                    + " is not below h = " + std::to_string(h));
    }
    if (h >= d) {
      out.push_back("h = " + std::to_string(h) + " is not below d = "
                    + std::to_string(d));
    }
    if (d >= n) {
      out.push_back("d = " + std::to_string(d) + " is not below n = "
                    + std::to_string(n));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Relator
  ////////////////////////////////////////////////////////////////////////

  Word flatten_pieces(Word const&                   period,
                      std::vector<Word> const&      pieces,
                      std::vector<long long> const& exponents) {
    if (pieces.size() != exponents.size()) {
      throw Error("relator: piece and exponent counts differ");
    }
    Word out;
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      out = concat(out, pieces[j]);
      out = concat(out, Word::power(period, exponents[j]));
    }
    return out;
  }

  Relator Relator::structured(Word                   period,
                              int                    rank,
                              Word                   conjugating_base,
                              std::vector<Word>      pieces,
                              std::vector<long long> exponents) {
    Relator r;
    r.structured_ = true;
    r.rank_       = rank;
    r.flattened_  = flatten_pieces(period, pieces, exponents);
    r.period_     = std::move(period);
    r.z_          = std::move(conjugating_base);
    r.pieces_     = std::move(pieces);
    r.exponents_  = std::move(exponents);
    return r;
  }

  Relator Relator::raw(Word word, int rank) {
    Relator r;
    r.rank_      = rank;
    r.flattened_ = std::move(word);
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // GradedPresentation
  ////////////////////////////////////////////////////////////////////////

  GradedPresentation::GradedPresentation(Params params)
      : alphabet_(params.h), params_(params), ranks_(1) {
    params_.validate();
  }

  RankLayer const& GradedPresentation::layer(int rank) const {
    if (rank < 0 || rank > built_rank()) {
      throw Error("rank " + std::to_string(rank) + " exceeds built rank "
                  + std::to_string(built_rank()));
    }
    return ranks_[static_cast<std::size_t>(rank)];
  }

  void GradedPresentation::push_rank(RankLayer layer) {
    int const rank = built_rank() + 1;
    for (auto const& p : layer.periods) {
      if (p.rank != rank || static_cast<int>(p.word.size()) != rank) {
        throw Error("period of wrong rank/length at rank "
                    + std::to_string(rank));
      }
      alphabet_.check(p.word.letters());
    }
    for (auto const& r : layer.relators) {
      if (r.rank() != rank) {
        throw Error("relator of wrong rank at rank " + std::to_string(rank));
      }
      alphabet_.check(r.flattened().letters());
    }
    ranks_.push_back(std::move(layer));
  }

  std::vector<Relator const*> GradedPresentation::relators_up_to(int rank) const {
    std::vector<Relator const*> out;
    for (int i = 0; i <= std::min(rank, built_rank()); ++i) {
      for (auto const& r : ranks_[static_cast<std::size_t>(i)].relators) {
        out.push_back(&r);
      }
    }
    return out;
  }

  std::size_t GradedPresentation::relator_count(int rank) const {
    std::size_t n = 0;
    for (int i = 0; i <= std::min(rank, built_rank()); ++i) {
      n += ranks_[static_cast<std::size_t>(i)].relators.size();
    }
    return n;
  }

  GradedPresentation GradedPresentation::truncated(int rank) const {
    GradedPresentation out(params_);
    for (int i = 1; i <= std::min(rank, built_rank()); ++i) {
      out.push_rank(ranks_[static_cast<std::size_t>(i)]);
    }
    return out;
  }

  long long min_relator_length(Params const& params, int rank) {
    if (rank < 3) {
      throw Error("min_relator_length: rank must be >= 3");
    }
    return static_cast<long long>(params.h) * rank
           * (static_cast<long long>(params.n) - params.d - 2);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string join_exponents(std::vector<long long> const& e) {
      std::string s;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (i != 0) {
          s += ',';
        }
        s += std::to_string(e[i]);
      }
      return s;
    }

    std::vector<std::string> split(std::string const& s, char sep) {
      std::vector<std::string> out;
      std::string              cur;
      for (char ch : s) {
        if (ch == sep) {
          out.push_back(cur);
          cur.clear();
        } else {
          cur += ch;
        }
      }
      out.push_back(cur);
      return out;
    }

    std::string trim(std::string const& s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) {
        return "";
      }
      auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    }

    [[noreturn]] void fail(std::size_t line, std::string const& msg) {
      throw ParseError("line " + std::to_string(line) + ": " + msg);
    }
  }  // namespace

  std::string serialize(GradedPresentation const& p) {
    auto const&        ab = p.alphabet();
    std::ostringstream os;
    os << "gpres v1\n";
    os << "params alpha=" << p.params().alpha.str() << " h=" << p.params().h
       << " d=" << p.params().d << " n=" << p.params().n << "\n";
    for (int i = 0; i <= p.built_rank(); ++i) {
      auto const& layer = p.layer(i);
      os << "rank " << i << "\n";
      for (auto const& per : layer.periods) {
        os << "period " << ab.format(per.word) << "\n";
      }
      for (auto const& r : layer.relators) {
        if (!r.is_structured()) {
          os << "relator word=\"" << ab.format(r.flattened()) << "\"\n";
          continue;
        }
        os << "relator period=\"" << ab.format(r.period()) << "\" z=\""
           << ab.format(r.conjugating_base()) << "\" t=";
        for (std::size_t j = 0; j < r.pieces().size(); ++j) {
          if (j != 0) {
            os << ';';
          }
          os << ab.format(r.pieces()[j]);
        }
        os << " e=" << join_exponents(r.exponents()) << "\n";
      }
    }
    return os.str();
  }

  GradedPresentation parse_presentation(std::string_view text) {
    static std::regex const params_re(
        R"(^params alpha=(-?\d+(?:/\d+)?) h=(-?\d+) d=(-?\d+) n=(-?\d+)$)");
    static std::regex const structured_re(
        R"re(^relator period="([^"]*)" z="([^"]*)" t=(.*) e=(-?\d+(?:,-?\d+)*)$)re");
    static std::regex const raw_re(R"re(^relator word="([^"]*)"$)re");
    static std::regex const rank_re(R"(^rank (\d+)$)");

    std::istringstream                is{std::string(text)};
    std::string                       line;
    std::size_t                       lineno = 0;
    std::optional<GradedPresentation> pres;
    std::vector<RankLayer>            layers(1);
    int                               current = -1;
    bool                              header  = false;

    while (std::getline(is, line)) {
      ++lineno;
      line = trim(line);
      if (line.empty() || line[0] == '#') {
        continue;
      }
      if (!header) {
        if (line != "gpres v1") {
          fail(lineno, "expected header 'gpres v1'");
        }
        header = true;
        continue;
      }
      std::smatch m;
      if (!pres) {
        if (!std::regex_match(line, m, params_re)) {
          fail(lineno, "expected params line");
        }
        Params params;
        try {
          params.alpha = Rational::parse(m[1].str());
          params.h     = std::stoi(m[2].str());
          params.d     = std::stoi(m[3].str());
          params.n     = std::stoi(m[4].str());
          pres.emplace(params);
        } catch (Error const& e) {
          fail(lineno, e.what());
        }
        continue;
      }
      auto const& ab = pres->alphabet();
      try {
        if (std::regex_match(line, m, rank_re)) {
          int r = std::stoi(m[1].str());
          if (r <= current) {
            fail(lineno, "ranks must increase");
          }
          current = r;
          if (layers.size() <= static_cast<std::size_t>(r)) {
            layers.resize(static_cast<std::size_t>(r) + 1);
          }
        } else if (line.rfind("period ", 0) == 0) {
          if (current < 1) {
            fail(lineno, "period outside a positive rank");
          }
          Word w = ab.parse(line.substr(7));
          if (static_cast<int>(w.size()) != current) {
            fail(lineno, "period length differs from its rank");
          }
          layers[static_cast<std::size_t>(current)].periods.push_back(
              {std::move(w), current});
        } else if (std::regex_match(line, m, structured_re)) {
          if (current < 1) {
            fail(lineno, "relator outside a positive rank");
          }
          auto& layer  = layers[static_cast<std::size_t>(current)];
          Word  period = ab.parse(m[1].str());
          bool  known  = false;
          for (auto const& p : layer.periods) {
            known = known || p.word == period;
          }
          if (!known) {
            fail(lineno, "relator period is not a period of this rank");
          }
          Word              z = ab.parse(m[2].str());
          std::vector<Word> pieces;
          for (auto const& t : split(m[3].str(), ';')) {
            pieces.push_back(ab.parse(t));
          }
          std::vector<long long> exps;
          for (auto const& e : split(m[4].str(), ',')) {
            exps.push_back(std::stoll(e));
          }
          if (pieces.size() != exps.size()) {
            fail(lineno, "piece and exponent counts differ");
          }
          if (static_cast<int>(pieces.size()) != ab.h()) {
            fail(lineno, "relator must have h pieces");
          }
          layer.relators.push_back(Relator::structured(
              period, current, z, std::move(pieces), std::move(exps)));
        } else if (std::regex_match(line, m, raw_re)) {
          if (current < 1) {
            fail(lineno, "relator outside a positive rank");
          }
          Word w = ab.parse(m[1].str());
          if (w.empty()) {
            fail(lineno, "empty relator");
          }
          layers[static_cast<std::size_t>(current)].relators.push_back(
              Relator::raw(std::move(w), current));
        } else {
          fail(lineno, "unrecognised line '" + line + "'");
        }
      } catch (ParseError const& e) {
        if (std::string(e.what()).rfind("line ", 0) == 0) {
          throw;
        }
        fail(lineno, e.what());
      } catch (std::out_of_range const&) {
        fail(lineno, "number out of range");
      }
    }
    if (!pres) {
      throw ParseError("missing header or params line");
    }
    for (std::size_t i = 1; i < layers.size(); ++i) {
      pres->push_rank(std::move(layers[i]));
    }
    return *std::move(pres);
  }

  GradedPresentation load_presentation(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
  }

  void save_presentation(GradedPresentation const& p, std::string const& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw Error("cannot write " + path);
    }
    out << serialize(p);
  }

}  // namespace gpres
