#include "gpres/coset.hpp"

namespace gpres {

  namespace {
    class Enumerator {
     public:
      Enumerator(std::size_t gens, std::size_t limit)
          : cols_(2 * gens), limit_(limit) {
        new_row();
      }

      bool overflow() const noexcept { return overflow_; }
      std::size_t defined() const noexcept { return table_.size(); }
      bool live(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

      int get(std::size_t c, std::size_t x) const { return table_[c][x]; }

      void define(std::size_t c, std::size_t x) {
        if (table_.size() >= limit_) {
          overflow_ = true;
          return;
        }
        int const d  = new_row();
        table_[c][x] = d;
        table_[static_cast<std::size_t>(d)][x ^ 1U] = static_cast<int>(c);
      }

      void scan_and_fill(std::size_t alpha, Word const& w) {
        auto const  r = w.size();
        std::size_t f = alpha;
        std::size_t b = alpha;
        std::size_t i = 0;
        std::size_t j = r;  // exclusive upper end of the unscanned part
        for (;;) {
          while (i < j && table_[f][w[i].code()] >= 0) {
            f = static_cast<std::size_t>(table_[f][w[i].code()]);
            ++i;
          }
          if (i == j) {
            if (f != b) {
              coincidence(f, b);
            }
            return;
          }
          while (j > i && table_[b][w[j - 1].inverse().code()] >= 0) {
            b = static_cast<std::size_t>(table_[b][w[j - 1].inverse().code()]);
            --j;
          }
          if (j == i) {
            if (f != b) {
              coincidence(f, b);
            }
            return;
          }
          if (j == i + 1) {
            // Deduction closes the cycle.
            table_[f][w[i].code()]           = static_cast<int>(b);
            table_[b][w[i].inverse().code()] = static_cast<int>(f);
            return;
          }
          define(f, w[i].code());
          if (overflow_) {
            return;
          }
        }
      }

      CosetTable compact(std::size_t gens) const {
        std::vector<int> index(table_.size(), -1);
        int              next = 0;
        for (std::size_t c = 0; c < table_.size(); ++c) {
          if (live(c)) {
            index[c] = next++;
          }
        }
        std::vector<std::vector<int>> rows;
        for (std::size_t c = 0; c < table_.size(); ++c) {
          if (!live(c)) {
            continue;
          }
          std::vector<int> row(cols_);
          for (std::size_t x = 0; x < cols_; ++x) {
            auto t = static_cast<std::size_t>(table_[c][x]);
            while (!live(t)) {
              t = static_cast<std::size_t>(parent_[t]);
            }
            row[x] = index[t];
          }
          rows.push_back(std::move(row));
        }
        return CosetTable(gens, std::move(rows));
      }

     private:
      int new_row() {
        table_.emplace_back(cols_, -1);
        parent_.push_back(static_cast<int>(table_.size() - 1));
        return static_cast<int>(table_.size() - 1);
      }

      std::size_t rep(std::size_t c) {
        std::size_t r = c;
        while (parent_[r] != static_cast<int>(r)) {
          r = static_cast<std::size_t>(parent_[r]);
        }
        while (parent_[c] != static_cast<int>(c)) {
          std::size_t next = static_cast<std::size_t>(parent_[c]);
          parent_[c]       = static_cast<int>(r);
          c                = next;
        }
        return r;
      }

      void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue) {
        std::size_t const phi = rep(k);
        std::size_t const psi = rep(l);
        if (phi == psi) {
          return;
        }
        std::size_t const mu = std::min(phi, psi);
        std::size_t const nu = std::max(phi, psi);
        parent_[nu]          = static_cast<int>(mu);
        queue.push_back(nu);
      }

      void coincidence(std::size_t a, std::size_t b) {
        std::vector<std::size_t> queue;
        merge(a, b, queue);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
          std::size_t const gamma = queue[qi];
          for (std::size_t x = 0; x < cols_; ++x) {
            int const d = table_[gamma][x];
            if (d < 0) {
              continue;
            }
            auto const delta = static_cast<std::size_t>(d);
            table_[delta][x ^ 1U] = -1;
            std::size_t const mu = rep(gamma);
            std::size_t const nu = rep(delta);
            if (table_[mu][x] >= 0) {
              merge(nu, static_cast<std::size_t>(table_[mu][x]), queue);
            } else if (table_[nu][x ^ 1U] >= 0) {
              merge(mu, static_cast<std::size_t>(table_[nu][x ^ 1U]), queue);
            } else {
              table_[mu][x]      = static_cast<int>(nu);
              table_[nu][x ^ 1U] = static_cast<int>(mu);
            }
          }
        }
      }

      std::size_t                   cols_;
      std::size_t                   limit_;
      bool                          overflow_ = false;
      std::vector<std::vector<int>> table_;
      std::vector<int>              parent_;
    };
  }  // namespace

  std::size_t CosetTable::element(Word const& w) const {
    std::size_t c = 0;
    for (Letter l : w) {
      c = act(c, l);
    }
    return c;
  }

  std::optional<CosetTable> enumerate_cosets(std::size_t              gens,
                                             std::vector<Word> const& relators,
                                             std::size_t              limit) {
    for (auto const& r : relators) {
      for (Letter l : r) {
        if (l.gen() >= gens) {
          throw Error("coset enumeration: generator out of range");
        }
      }
    }
    Enumerator e(gens, limit);
    for (std::size_t alpha = 0; alpha < e.defined(); ++alpha) {
      if (!e.live(alpha)) {
        continue;
      }
      for (auto const& r : relators) {
        if (r.empty()) {
          continue;
        }
        e.scan_and_fill(alpha, r);
        if (e.overflow()) {
          return std::nullopt;
        }
        if (!e.live(alpha)) {
          break;
        }
      }
      if (!e.live(alpha)) {
        continue;
      }
      for (std::size_t x = 0; x < 2 * gens; ++x) {
        if (e.get(alpha, x) < 0) {
          e.define(alpha, x);
          if (e.overflow()) {
            return std::nullopt;
          }
        }
      }
    }
    return e.compact(gens);
  }

}  // namespace gpres
