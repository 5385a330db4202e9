#include "classaut/coset_enumeration.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "classaut/error.hpp"

namespace classaut {

namespace {

constexpr int kUndefined = -1;

// Columns: 2g is generator g, 2g+1 its inverse.
int column_of(Letter l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }
int inverse_column(int col) { return col ^ 1; }

class CosetTable {
 public:
  CosetTable(const Presentation& p, std::size_t max_cosets)
      : columns_(2 * static_cast<int>(p.generators.size())),
        max_live_(max_cosets),
        // Dead rows are never reused; bound total storage as well.
        max_rows_(std::max<std::size_t>(4 * max_cosets, 1024)) {
    for (const Word& w : p.relators) {
      auto letters = cyclically_reduce(expand_free(w));
      if (letters.empty()) continue;
      std::vector<int> cols;
      cols.reserve(letters.size());
      for (Letter l : letters) cols.push_back(column_of(l));
      relators_.push_back(std::move(cols));
    }
    new_row();
  }

  void run() {
    for (current_ = 0; current_ < rows(); ++current_) {
      if (!alive(current_)) continue;
      for (const auto& r : relators_) {
        scan_and_fill(current_, r);
        process_deductions();
        if (!alive(current_)) break;
      }
      if (!alive(current_)) continue;
      for (int x = 0; x < columns_; ++x) {
        if (entry(current_, x) == kUndefined) {
          define(current_, x);
          process_deductions();
        }
        if (!alive(current_)) break;
        // A lookahead inside define() may have left this column open.
        if (entry(current_, x) == kUndefined) --x;
      }
    }
  }

  // Live cosets in definition order, remapped to 0..n-1.
  std::vector<int> compact_table(int& n_out) const {
    std::vector<int> remap(static_cast<std::size_t>(rows()), kUndefined);
    int n = 0;
    for (int c = 0; c < rows(); ++c) {
      if (alive(c)) remap[static_cast<std::size_t>(c)] = n++;
    }
    std::vector<int> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(columns_));
    for (int c = 0; c < rows(); ++c) {
      if (!alive(c)) continue;
      for (int x = 0; x < columns_; ++x) {
        out[static_cast<std::size_t>(remap[static_cast<std::size_t>(c)]) *
                static_cast<std::size_t>(columns_) +
            static_cast<std::size_t>(x)] =
            remap[static_cast<std::size_t>(entry(c, x))];
      }
    }
    n_out = n;
    return out;
  }

  int columns() const { return columns_; }
  EnumerationStats stats;

 private:
  int rows() const { return static_cast<int>(parent_.size()); }
  bool alive(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  int& entry(int c, int x) {
    return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(columns_) +
                  static_cast<std::size_t>(x)];
  }
  int entry(int c, int x) const {
    return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(columns_) +
                  static_cast<std::size_t>(x)];
  }

  int new_row() {
    const int c = rows();
    parent_.push_back(c);
    table_.resize(table_.size() + static_cast<std::size_t>(columns_), kUndefined);
    ++live_;
    ++stats.cosets_defined;
    stats.max_live = std::max(stats.max_live, live_);
    return c;
  }

  // Returns false when a lookahead ran first; the table may then have
  // collapsed and the caller must rescan.
  bool define(int c, int x) {
    if (live_ >= max_live_ || static_cast<std::size_t>(rows()) >= max_rows_) {
      lookahead();
      if (live_ >= max_live_ || static_cast<std::size_t>(rows()) >= max_rows_) {
        throw Error(ErrorCode::kEnumerationLimit,
                    "coset enumeration exceeded " + std::to_string(max_live_) + " cosets");
      }
      return false;
    }
    const int d = new_row();
    entry(c, x) = d;
    entry(d, inverse_column(x)) = c;
    push_deduction(c, x);
    return true;
  }

  void push_deduction(int c, int x) {
    if (deductions_.size() < kMaxDeductions) {
      deductions_.emplace_back(c, x);
    } else {
      deductions_overflowed_ = true;
    }
  }

  // Scans relator r at coset c, defining new cosets for any gap.
  void scan_and_fill(int c, const std::vector<int>& r) {
    int f = c;
    int b = c;
    int i = 0;
    int j = static_cast<int>(r.size()) - 1;
    while (true) {
      while (i <= j && entry(f, r[static_cast<std::size_t>(i)]) != kUndefined) {
        f = entry(f, r[static_cast<std::size_t>(i)]);
        ++i;
      }
      if (i > j) {
        if (f != c) coincidence(f, c);
        return;
      }
      while (j >= i && entry(b, inverse_column(r[static_cast<std::size_t>(j)])) != kUndefined) {
        b = entry(b, inverse_column(r[static_cast<std::size_t>(j)]));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        const int x = r[static_cast<std::size_t>(i)];
        entry(f, x) = b;
        entry(b, inverse_column(x)) = f;
        push_deduction(f, x);
        return;
      }
      if (!define(f, r[static_cast<std::size_t>(i)])) {
        if (!alive(c)) return;
        f = b = c;
        i = 0;
        j = static_cast<int>(r.size()) - 1;
      }
    }
  }

  // Scans relator r at coset c without defining anything.
  void scan(int c, const std::vector<int>& r) {
    int f = c;
    int b = c;
    int i = 0;
    int j = static_cast<int>(r.size()) - 1;
    while (i <= j && entry(f, r[static_cast<std::size_t>(i)]) != kUndefined) {
      f = entry(f, r[static_cast<std::size_t>(i)]);
      ++i;
    }
    if (i > j) {
      if (f != c) coincidence(f, c);
      return;
    }
    while (j >= i && entry(b, inverse_column(r[static_cast<std::size_t>(j)])) != kUndefined) {
      b = entry(b, inverse_column(r[static_cast<std::size_t>(j)]));
      --j;
    }
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      const int x = r[static_cast<std::size_t>(i)];
      entry(f, x) = b;
      entry(b, inverse_column(x)) = f;
      push_deduction(f, x);
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(c)) continue;
      const int d = entry(c, x);
      for (const auto& r : relators_) {
        if (alive(c)) scan(c, r);
        if (d != kUndefined && alive(d)) scan(d, r);
      }
    }
    if (deductions_overflowed_) {
      deductions_overflowed_ = false;
      lookahead();
    }
  }

  void lookahead() {
    ++stats.lookaheads;
    for (int c = 0; c < rows(); ++c) {
      for (const auto& r : relators_) {
        if (!alive(c)) break;
        scan(c, r);
      }
    }
    deductions_.clear();
  }

  int rep(int c) {
    int root = c;
    while (parent_[static_cast<std::size_t>(root)] != root) {
      root = parent_[static_cast<std::size_t>(root)];
    }
    while (parent_[static_cast<std::size_t>(c)] != root) {
      int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = root;
      c = next;
    }
    return root;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    --live_;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    ++stats.coincidences;
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int dead = queue[qi];
      for (int x = 0; x < columns_; ++x) {
        const int target = entry(dead, x);
        if (target == kUndefined) continue;
        const int xi = inverse_column(x);
        if (entry(target, xi) == dead) entry(target, xi) = kUndefined;
        const int mu = rep(dead);
        const int nu = rep(target);
        if (entry(mu, x) != kUndefined) {
          merge(nu, entry(mu, x), queue);
        } else if (entry(nu, xi) != kUndefined) {
          merge(mu, entry(nu, xi), queue);
        } else {
          entry(mu, x) = nu;
          entry(nu, xi) = mu;
          push_deduction(mu, x);
        }
      }
    }
  }

  static constexpr std::size_t kMaxDeductions = 1u << 16;

  int columns_;
  std::size_t max_live_;
  std::size_t max_rows_;
  std::size_t live_ = 0;
  int current_ = 0;
  std::vector<std::vector<int>> relators_;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::vector<std::pair<int, int>> deductions_;
  bool deductions_overflowed_ = false;
};

}  // namespace

FiniteGroup todd_coxeter(const Presentation& p, std::size_t max_cosets, EnumerationStats* stats) {
  if (p.generators.empty()) {
    throw Error(ErrorCode::kSyntaxError, "presentation needs at least one generator");
  }
  if (max_cosets < 1) throw Error(ErrorCode::kEnumerationLimit, "max_cosets must be positive");

  CosetTable ct(p, max_cosets);
  ct.run();
  int n = 0;
  const std::vector<int> cosets = ct.compact_table(n);
  if (stats) *stats = ct.stats;

  if (p.order && *p.order != n) {
    throw Error(ErrorCode::kOrderMismatch, "declared order " + std::to_string(*p.order) +
                                               " but enumeration found " + std::to_string(n));
  }

  // Coset i is the element w_i with 0 . w_i = i. Multiplying a by b follows
  // the word of b from coset a; the BFS tree over generator columns gives
  // every b as parent(b) * generator.
  const auto cols = static_cast<std::size_t>(ct.columns());
  const auto un = static_cast<std::size_t>(n);
  std::vector<Element> gens;
  for (std::size_t g = 0; g < p.generators.size(); ++g) gens.push_back(cosets[2 * g]);

  std::vector<int> bfs{0};
  std::vector<int> parent(un, -1);
  std::vector<int> letter(un, -1);
  std::vector<char> seen(un, 0);
  seen[0] = 1;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const auto cur = static_cast<std::size_t>(bfs[head]);
    for (std::size_t g = 0; g < p.generators.size(); ++g) {
      const int next = cosets[cur * cols + 2 * g];
      if (seen[static_cast<std::size_t>(next)]) continue;
      seen[static_cast<std::size_t>(next)] = 1;
      parent[static_cast<std::size_t>(next)] = static_cast<int>(cur);
      letter[static_cast<std::size_t>(next)] = static_cast<int>(g);
      bfs.push_back(next);
    }
  }

  std::vector<Element> table(un * un);
  for (std::size_t a = 0; a < un; ++a) table[a * un] = static_cast<Element>(a);
  for (std::size_t k = 1; k < bfs.size(); ++k) {
    const auto b = static_cast<std::size_t>(bfs[k]);
    const auto pb = static_cast<std::size_t>(parent[b]);
    const auto col = 2 * static_cast<std::size_t>(letter[b]);
    for (std::size_t a = 0; a < un; ++a) {
      table[a * un + b] = cosets[static_cast<std::size_t>(table[a * un + pb]) * cols + col];
    }
  }
  return FiniteGroup::from_table(std::move(table), std::move(gens), p.generators);
}

}  // namespace classaut
