#include "gpres/construct.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "gpres/condition_r.hpp"

namespace gpres {

  ZPool ZPool::ball(std::size_t radius) {
    ZPool z;
    z.radius_ = radius;
    return z;
  }

  ZPool ZPool::explicit_words(std::vector<Word> words) {
    ZPool z;
    z.ball_  = false;
    z.words_ = std::move(words);
    return z;
  }

  std::vector<Word> ZPool::words(Alphabet const& alphabet) const {
    if (ball_) {
      return gpres::ball(alphabet, radius_);
    }
    std::set<Word> uniq;
    for (auto const& w : words_) {
      alphabet.check(w.letters());
      uniq.insert(w);
    }
    return {uniq.begin(), uniq.end()};
  }

  std::string BuildLog::str() const {
    std::string out;
    for (auto const& l : lines) {
      out += l;
      out += '\n';
    }
    return out;
  }

  namespace {
    void note(BuildLog* log, std::string line) {
      if (log != nullptr) {
        log->add(std::move(line));
      }
    }

    // ab * (c_1 ... c_h)^k for some k: a and b sums are 1, c sums all equal.
    bool congruent_to_ab(Alphabet const& ab, Word const& w) {
      auto const v = abelianize(ab, w);
      if (v[0] != 1 || v[1] != 1) {
        return false;
      }
      for (std::size_t g = 3; g < v.size(); ++g) {
        if (v[g] != v[2]) {
          return false;
        }
      }
      return true;
    }

    std::string show(Alphabet const& ab, Word const& w) {
      return "\"" + ab.format(w) + "\"";
    }
  }  // namespace

  std::vector<Word> period_candidates(GradedPresentation const& p, int i,
                                      BuildConfig const& cfg) {
    auto const& ab = p.alphabet();
    if (i < 1) {
      throw Error("period_candidates: rank must be positive");
    }
    std::vector<Word> out;
    if (cfg.targeted) {
      auto it = cfg.targeted->find(i);
      if (it == cfg.targeted->end()) {
        return out;
      }
      for (auto const& w : it->second) {
        ab.check(w.letters());
        if (w.size() != static_cast<std::size_t>(i)) {
          throw Error("candidate period " + ab.format(w) + " does not have length "
                      + std::to_string(i));
        }
        if (congruent_to_ab(ab, w)) {
          out.push_back(w);
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
    if (i > cfg.exhaustive_rank_cap) {
      throw Error("exhaustive period enumeration is capped at rank "
                  + std::to_string(cfg.exhaustive_rank_cap) + "; supply candidates");
    }
    return enumerate_reduced(ab, static_cast<std::size_t>(i),
                             [&](Word const& w) { return congruent_to_ab(ab, w); });
  }

  std::vector<Period> select_periods(GradedPresentation const& p, int i,
                                     std::vector<Word> const& candidates,
                                     BuildConfig const& cfg, BuildLog* log) {
    auto const&  ab = p.alphabet();
    Solver const lower(p, i - 1, cfg.solver);
    std::vector<Period> out;
    for (auto const& x : candidates) {
      auto const c1 = period_clause1(lower, x, i);
      if (!c1.passed()) {
        note(log, "rank " + std::to_string(i) + " period " + show(ab, x) + " excluded: clause 1 "
                      + to_string(c1.outcome) + " (" + c1.detail + ")");
        continue;
      }
      bool keep = true;
      for (auto const& y : out) {
        auto const c2 = period_clause2(lower, x, y.word);
        if (!c2.passed()) {
          note(log, "rank " + std::to_string(i) + " period " + show(ab, x)
                        + " excluded: clause 2 " + to_string(c2.outcome) + " (" + c2.detail + ")");
          keep = false;
          break;
        }
      }
      if (keep) {
        out.push_back({x, i});
      }
    }
    return out;
  }

  std::vector<Word> minimal_conjugate_words(GradedPresentation const& p, int i,
                                            int j, Word const& z,
                                            BuildConfig const& cfg, BuildLog* log) {
    auto const& ab = p.alphabet();
    ab.check(z.letters());
    Word const  c     = Word::letter(Letter(ab.c(j), false));
    Word const  w0    = concat({z, c, invert(z)});
    auto const  limit = static_cast<std::size_t>(p.params().d) * static_cast<std::size_t>(i);
    Solver const lower(p, i - 1, cfg.solver);
    std::string const what = "Y(" + std::to_string(i) + "," + std::to_string(j) + ","
                             + show(ab, z) + ")";

    if (lower.relators().empty()) {
      // Free lower ranks: the reduced word is the unique minimal one.
      if (w0.size() >= limit) {
        note(log, what + " empty: reduced length " + std::to_string(w0.size()) + " >= d*i");
        return {};
      }
      return {w0};
    }
    auto const [u, v] = lower.shortest_equal(w0);
    if (!v.trivial()) {
      note(log, what + " empty: minimality undecided (" + v.reason + ")");
      return {};
    }
    if (u.size() >= limit) {
      note(log, what + " empty: minimal length " + std::to_string(u.size()) + " >= d*i");
      return {};
    }
    // Other minimal words share u's length; the scan stays within budget.
    std::vector<Word> out{u};
    ReducedWordEnumerator en(ab, u.size());
    std::size_t       seen = 0;
    auto const        target = abelianize(ab, u);
    while (auto t = en.next()) {
      if (++seen > cfg.solver.node_budget) {
        note(log, what + " truncated to its shortlex-least member: sphere exceeds the budget");
        return {u};
      }
      if (*t <= u || !lower.lattice().contains(abelianize(ab, *t) - target)) {
        continue;
      }
      auto const e = lower.is_identity(concat(invert(u), *t));
      if (e.trivial()) {
        out.push_back(*t);
      } else if (e.unknown()) {
        note(log, what + " candidate " + show(ab, *t) + " undecided: " + e.reason);
      }
    }
    return out;
  }

  Relator build_relator(Params const& params, Word const& period,
                        std::vector<Word> const& pieces, Word const& z) {
    if (pieces.size() != static_cast<std::size_t>(params.h)) {
      throw Error("build_relator: expected " + std::to_string(params.h) + " pieces, got "
                  + std::to_string(pieces.size()));
    }
    auto const rank = static_cast<int>(period.size());
    for (auto const& t : pieces) {
      if (t.size() >= static_cast<std::size_t>(params.d) * static_cast<std::size_t>(rank)) {
        throw Error("build_relator: piece longer than d * rank");
      }
    }
    std::vector<long long> exps;
    for (int j = 1; j <= params.h; ++j) {
      exps.push_back(j % 2 == 0 ? params.n : -static_cast<long long>(params.n));
    }
    return Relator::structured(period, rank, z, pieces, std::move(exps));
  }

  GradedPresentation extend_rank(GradedPresentation const& p, int i,
                                 ZPool const& pool, BuildConfig const& cfg,
                                 BuildLog* log) {
    if (p.built_rank() != i - 1) {
      throw Error("extend_rank: presentation is built to rank " + std::to_string(p.built_rank())
                  + ", cannot add rank " + std::to_string(i));
    }
    auto const& ab = p.alphabet();
    auto const& prm = p.params();
    RankLayer   layer;
    if (i >= 3) {
      layer.periods = select_periods(p, i, period_candidates(p, i, cfg), cfg, log);
    }
    Solver const lower(p, i - 1, cfg.solver);
    auto const   zs = pool.words(ab);

    for (auto const& period : layer.periods) {
      for (auto const& z : zs) {
        std::vector<Word> pieces;
        for (int j = 1; j <= prm.h; ++j) {
          auto ys = minimal_conjugate_words(p, i, j, z, cfg, log);
          if (ys.empty()) {
            break;
          }
          if (ys.size() > 1) {
            note(log, "rank " + std::to_string(i) + " Y(" + std::to_string(j) + ","
                          + show(ab, z) + ") has " + std::to_string(ys.size())
                          + " minimal words; using the shortlex-least");
          }
          pieces.push_back(ys.front());
        }
        std::string const what = "rank " + std::to_string(i) + " relator A=" + show(ab, period.word)
                                 + " Z=" + show(ab, z);
        if (pieces.size() != static_cast<std::size_t>(prm.h)) {
          note(log, what + " excluded: no admissible piece");
          continue;
        }
        auto cand = build_relator(prm, period.word, pieces, z);
        bool keep = true;
        for (auto const& prev : layer.relators) {
          for (int sign : {1, -1}) {
            Word const y = sign > 0 ? prev.flattened() : invert(prev.flattened());
            auto const v = lower.are_conjugate(cand.flattened(), y);
            if (!v.nontrivial()) {
              note(log, what + " excluded: " + (v.trivial() ? "conjugate to" : "undecided against")
                            + (sign > 0 ? " " : " the inverse of ") + "A="
                            + show(ab, prev.period()) + " Z=" + show(ab, prev.conjugating_base())
                            + (v.unknown() ? " (" + v.reason + ")" : ""));
              keep = false;
              break;
            }
          }
          if (!keep) {
            break;
          }
        }
        if (keep) {
          layer.relators.push_back(std::move(cand));
        }
      }
    }
    GradedPresentation out = p;
    out.push_rank(std::move(layer));
    return out;
  }

  GradedPresentation build(Params const& params, int max_rank, ZPool const& pool,
                           BuildConfig const& cfg, BuildLog* log) {
    params.validate();
    cfg.solver.validate();
    if (max_rank < 2) {
      throw Error("build: max_rank must be at least 2");
    }
    GradedPresentation p(params);
    for (int i = 1; i <= max_rank; ++i) {
      p = extend_rank(p, i, pool, cfg, log);
    }
    return p;
  }

  std::map<int, std::vector<Word>> parse_period_pool(Alphabet const& alphabet,
                                                     std::string_view text) {
    std::map<int, std::vector<Word>> out;
    std::optional<int>               rank;
    std::istringstream               in{std::string(text)};
    std::string                      line;
    for (int no = 1; std::getline(in, line); ++no) {
      auto const b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') {
        continue;
      }
      auto const e    = line.find_last_not_of(" \t\r");
      auto const body = line.substr(b, e - b + 1);
      try {
        if (body.rfind("rank ", 0) == 0) {
          std::size_t used = 0;
          auto const  r    = std::stoi(body.substr(5), &used);
          if (used != body.size() - 5 || r < 1) {
            throw ParseError("bad rank header");
          }
          rank = r;
          out[r];
          continue;
        }
        if (!rank) {
          throw ParseError("word before any rank header");
        }
        auto w = alphabet.parse(body);
        if (w.size() != static_cast<std::size_t>(*rank)) {
          throw ParseError("word length " + std::to_string(w.size()) + " differs from rank "
                           + std::to_string(*rank));
        }
        out[*rank].push_back(std::move(w));
      } catch (std::logic_error const&) {
        throw ParseError("line " + std::to_string(no) + ": bad rank header");
      } catch (ParseError const& err) {
        throw ParseError("line " + std::to_string(no) + ": " + err.what());
      }
    }
    return out;
  }

  std::map<int, std::vector<Word>> load_period_pool(Alphabet const& alphabet,
                                                    std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_period_pool(alphabet, ss.str());
  }

}  // namespace gpres
