#include "picard/fpgroups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace picard {

// === Presentation text format ===

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Presentation p;
  bool have_names = false;
  while (std::getline(in, line)) {
    // strip comments and surrounding whitespace
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (!have_names) {
      p.names = tokens;
      have_names = true;
      continue;
    }
    GroupWord w;
    for (const std::string& t : tokens) {
      std::string name = t;
      int exp = 1;
      auto caret = t.find('^');
      if (caret != std::string::npos) {
        name = t.substr(0, caret);
        exp = std::stoi(t.substr(caret + 1));
        if (exp == 0) throw std::invalid_argument("parse_presentation: zero exponent in " + t);
      }
      auto it = std::find(p.names.begin(), p.names.end(), name);
      if (it == p.names.end())
        throw std::invalid_argument("parse_presentation: unknown generator " + name);
      int gen = static_cast<int>(it - p.names.begin());
      w.append(GroupWord::single(gen).pow(exp));
    }
    p.relators.push_back(w);
  }
  if (!have_names) throw std::invalid_argument("parse_presentation: no generator line");
  return p;
}

std::string serialize_presentation(const Presentation& p) {
  std::ostringstream os;
  for (std::size_t k = 0; k < p.names.size(); ++k) os << (k ? " " : "") << p.names[k];
  os << "\n";
  for (const GroupWord& r : p.relators) os << r.str(p.names) << "\n";
  return os.str();
}

Presentation picard_presentation() {
  Presentation p;
  p.names = {"a", "l", "t", "u"};
  const int A = 0, L = 1, T = 2, U = 3;
  auto w = [](std::initializer_list<Letter> ls) { return GroupWord(std::vector<Letter>(ls)); };
  p.relators = {
      w({{A, 1}, {A, 1}}),
      w({{L, 1}, {L, 1}}),
      w({{A, 1}, {L, 1}, {A, 1}, {L, 1}}),
      w({{T, 1}, {L, 1}, {T, 1}, {L, 1}}),
      w({{U, 1}, {L, 1}, {U, 1}, {L, 1}}),
      w({{A, 1}, {T, 1}, {A, 1}, {T, 1}, {A, 1}, {T, 1}}),
      w({{U, 1}, {A, 1}, {L, 1}, {U, 1}, {A, 1}, {L, 1}, {U, 1}, {A, 1}, {L, 1}}),
      w({{T, 1}, {U, 1}, {T, -1}, {U, -1}}),
  };
  return p;
}

// === CosetTable ===

CosetTable::CosetTable(int generator_count, std::vector<std::vector<int>> rows)
    : ngens_(generator_count), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (static_cast<int>(r.size()) != 2 * ngens_)
      throw std::invalid_argument("CosetTable: row width mismatch");
}

int CosetTable::action(int c, int gen, int exp) const {
  if (c < 0 || c >= cosets()) throw std::out_of_range("CosetTable::action: coset out of range");
  if (gen < 0 || gen >= ngens_) throw std::out_of_range("CosetTable::action: generator out of range");
  return rows_[c][2 * gen + (exp == 1 ? 0 : 1)];
}

int CosetTable::act_word(int c, const GroupWord& w) const {
  for (const Letter& l : w.letters()) c = action(c, l.gen, l.exp);
  return c;
}

// === Todd-Coxeter ===

namespace {

// HLT-style enumerator: scan relators at each live coset, filling gaps by
// defining new cosets; coincidences are merged with a union-find queue
// (the standard MERGE/COINCIDENCE processing).
class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<GroupWord>& subgroup,
             const EnumerationOptions& opts)
      : ngens_(p.generator_count()), ncols_(2 * p.generator_count()), opts_(opts) {
    for (const GroupWord& r : p.relators) relators_.push_back(flatten(r));
    for (const GroupWord& w : subgroup) subgroup_.push_back(flatten(w));
    for (const auto& r : relators_)
      for (int col : r)
        if (col >= ncols_) throw std::invalid_argument("coset_enumerate: relator indexes unknown generator");
    for (const auto& w : subgroup_)
      for (int col : w)
        if (col >= ncols_) throw std::invalid_argument("coset_enumerate: subgroup word indexes unknown generator");
  }

  CosetTable run() {
    add_coset();  // coset 0: the subgroup
    for (const auto& w : subgroup_) scan_and_fill(0, w);
    std::size_t defined_since_lookahead = 0;
    for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
      if (!alive(c)) continue;
      if (opts_.strategy == EnumerationStrategy::row_fill) fill_row(c);
      for (const auto& r : relators_) {
        scan_and_fill(c, r);
        if (!alive(c)) break;
      }
      if (alive(c) && opts_.strategy == EnumerationStrategy::relator_scan) fill_row(c);
      if (total_defined_ - defined_since_lookahead > opts_.lookahead_interval) {
        defined_since_lookahead = total_defined_;
        lookahead();
      }
    }
    return compact();
  }

 private:
  static constexpr int kUndef = -1;

  // letters as column indices: gen g exponent +1 -> 2g, exponent -1 -> 2g+1
  static std::vector<int> flatten(const GroupWord& w) {
    std::vector<int> cols;
    for (const Letter& l : w.letters()) cols.push_back(2 * l.gen + (l.exp == 1 ? 0 : 1));
    return cols;
  }
  static int inv_col(int col) { return col ^ 1; }

  bool alive(int c) const { return rep_[c] == c; }

  int rep(int c) {
    int r = c;
    while (rep_[r] != r) r = rep_[r];
    while (rep_[c] != r) {
      int next = rep_[c];
      rep_[c] = r;
      c = next;
    }
    return r;
  }

  int add_coset() {
    if (table_.size() >= opts_.cap)
      throw std::runtime_error("coset enumeration did not complete within cap");
    table_.emplace_back(ncols_, kUndef);
    rep_.push_back(static_cast<int>(table_.size()) - 1);
    ++total_defined_;
    return static_cast<int>(table_.size()) - 1;
  }

  int get(int c, int col) const { return table_[c][col]; }

  void set_edge(int c, int col, int d) {
    table_[c][col] = d;
    table_[d][inv_col(col)] = c;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep_[b] = a;
    dead_queue_.push_back(b);
  }

  void process_coincidences() {
    while (!dead_queue_.empty()) {
      int gamma = dead_queue_.front();
      dead_queue_.pop_front();
      for (int col = 0; col < ncols_; ++col) {
        int delta = table_[gamma][col];
        if (delta == kUndef) continue;
        table_[delta][inv_col(col)] = kUndef;
        int mu = rep(gamma), nu = rep(delta);
        if (table_[mu][col] != kUndef)
          merge(nu, table_[mu][col]);
        else if (table_[nu][inv_col(col)] != kUndef)
          merge(mu, table_[nu][inv_col(col)]);
        else
          set_edge(mu, col, nu);
      }
    }
  }

  void coincide(int a, int b) {
    merge(a, b);
    process_coincidences();
  }

  // Scan word w at coset c; define new cosets to close the scan (HLT).
  void scan_and_fill(int c, const std::vector<int>& w) {
    if (w.empty()) return;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    int f = c, b = c;
    while (true) {
      while (i <= j && get(f, w[i]) != kUndef) f = get(f, w[i++]);
      if (i > j) {
        if (f != b) coincide(f, b);
        return;
      }
      while (j >= i && get(b, inv_col(w[j])) != kUndef) b = get(b, inv_col(w[j--]));
      if (j < i) {
        if (f != b) coincide(f, b);
        return;
      }
      if (i == j) {  // exactly one gap: deduction closes the scan
        set_edge(f, w[i], b);
        return;
      }
      set_edge(f, w[i], add_coset());  // fill and keep scanning
    }
  }

  void fill_row(int c) {
    for (int col = 0; col < ncols_; ++col) {
      if (!alive(c)) return;
      if (table_[c][col] == kUndef) set_edge(c, col, add_coset());
    }
  }

  // Deduction-only sweep: rescan every relator at every live coset without
  // defining anything new (scans that still have gaps are just abandoned).
  void lookahead() {
    for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
      if (!alive(c)) continue;
      for (const auto& w : relators_) {
        if (w.empty()) continue;
        int i = 0, j = static_cast<int>(w.size()) - 1;
        int f = c, b = c;
        while (i <= j && get(f, w[i]) != kUndef) f = get(f, w[i++]);
        while (j >= i && get(b, inv_col(w[j])) != kUndef) b = get(b, inv_col(w[j--]));
        if (i > j) {
          if (f != b) coincide(f, b);
        } else if (i == j) {
          set_edge(f, w[i], b);
        }
        if (!alive(c)) break;
      }
    }
  }

  // Renumber live cosets in first-appearance order and emit the final table.
  CosetTable compact() {
    std::vector<int> order;
    std::vector<int> newid(table_.size(), kUndef);
    int root = rep(0);
    newid[root] = 0;
    order.push_back(root);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      int c = order[pos];
      for (int col = 0; col < ncols_; ++col) {
        int d = table_[c][col];
        if (d == kUndef)
          throw std::logic_error("coset_enumerate: incomplete table after enumeration");
        d = rep(d);
        if (newid[d] == kUndef) {
          newid[d] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    }
    std::vector<std::vector<int>> rows(order.size(), std::vector<int>(ncols_));
    for (std::size_t k = 0; k < order.size(); ++k)
      for (int col = 0; col < ncols_; ++col) rows[k][col] = newid[rep(table_[order[k]][col])];
    return CosetTable(ngens_, std::move(rows));
  }

  int ngens_, ncols_;
  EnumerationOptions opts_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> subgroup_;
  std::vector<std::vector<int>> table_;
  std::vector<int> rep_;
  std::deque<int> dead_queue_;
  std::size_t total_defined_ = 0;
};

}  // namespace

CosetTable coset_enumerate(const Presentation& p, const std::vector<GroupWord>& subgroup_words,
                           const EnumerationOptions& opts) {
  return Enumerator(p, subgroup_words, opts).run();
}

std::size_t quotient_order(const Presentation& p, const std::vector<GroupWord>& extra_relators,
                           const EnumerationOptions& opts) {
  Presentation q = p;
  q.relators.insert(q.relators.end(), extra_relators.begin(), extra_relators.end());
  return coset_enumerate(q, {}, opts).cosets();
}

CosetTable normal_closure_cosets(const Presentation& p, const std::vector<GroupWord>& words,
                                 const EnumerationOptions& opts) {
  // The table of the trivial subgroup of p + words is the right regular action
  // of the quotient group; relators of p act trivially on it, so the same
  // table is a coset table over p, and its point stabilizer is the kernel
  // <<words>>.
  Presentation q = p;
  q.relators.insert(q.relators.end(), words.begin(), words.end());
  return coset_enumerate(q, {}, opts);
}

// === Reidemeister-Schreier ===

Presentation subgroup_presentation(const Presentation& p, const CosetTable& table) {
  if (table.generator_count() != p.generator_count())
    throw std::invalid_argument("subgroup_presentation: table/presentation generator mismatch");
  const int m = table.cosets();
  const int n = p.generator_count();

  // Schreier tree from the standardized table: first appearance of each coset
  // marks its tree edge; tree edges contribute trivial Schreier generators.
  // tree[c][col] is true when the edge (c, col) lies in the tree (stored in
  // both directions).
  std::vector<std::vector<bool>> tree(m, std::vector<bool>(2 * n, false));
  std::vector<bool> reached(m, false);
  reached[0] = true;
  for (int c = 0; c < m; ++c) {
    for (int col = 0; col < 2 * n; ++col) {
      int gen = col / 2;
      int exp = col % 2 == 0 ? 1 : -1;
      int d = table.action(c, gen, exp);
      if (!reached[d]) {
        reached[d] = true;
        tree[c][col] = true;
        tree[d][col ^ 1] = true;
      }
    }
  }

  // Schreier generator indices for the non-tree (coset, generator) pairs.
  std::vector<std::vector<int>> sgen(m, std::vector<int>(n, -1));
  std::vector<std::string> names;
  for (int c = 0; c < m; ++c) {
    for (int g = 0; g < n; ++g) {
      if (tree[c][2 * g]) continue;
      sgen[c][g] = static_cast<int>(names.size());
      names.push_back("s" + std::to_string(names.size()));
    }
  }

  auto rewrite = [&](int start, const GroupWord& w) {
    GroupWord out;
    int cur = start;
    for (const Letter& l : w.letters()) {
      if (l.exp == 1) {
        int nxt = table.action(cur, l.gen, 1);
        if (sgen[cur][l.gen] >= 0) out.append(sgen[cur][l.gen], 1);
        cur = nxt;
      } else {
        int nxt = table.action(cur, l.gen, -1);
        if (sgen[nxt][l.gen] >= 0) out.append(sgen[nxt][l.gen], -1);
        cur = nxt;
      }
    }
    if (cur != start)
      throw std::logic_error("subgroup_presentation: rewriting did not return to base coset");
    return out;
  };

  Presentation result;
  result.names = std::move(names);
  for (int c = 0; c < m; ++c) {
    for (const GroupWord& r : p.relators) {
      GroupWord w = rewrite(c, r);
      if (!w.empty()) result.relators.push_back(std::move(w));
    }
  }
  return result;
}

// === Smith normal form ===

namespace {

// Index (i, j) >= (t, t) of a nonzero entry of minimal absolute value, or
// {-1, -1} when the trailing block is zero.
std::pair<int, int> min_nonzero(const std::vector<std::vector<BigInt>>& m, int t) {
  int bi = -1, bj = -1;
  BigInt best = 0;
  for (int i = t; i < static_cast<int>(m.size()); ++i) {
    for (int j = t; j < static_cast<int>(m[i].size()); ++j) {
      if (m[i][j] == 0) continue;
      BigInt a = abs_int(m[i][j]);
      if (bi < 0 || a < best) {
        best = a;
        bi = i;
        bj = j;
      }
    }
  }
  return {bi, bj};
}

}  // namespace

std::vector<BigInt> smith_normal_form(std::vector<std::vector<BigInt>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  for (const auto& r : m)
    if (static_cast<int>(r.size()) != cols)
      throw std::invalid_argument("smith_normal_form: ragged matrix");

  int t = 0;
  while (t < rows && t < cols) {
    auto [pi, pj] = min_nonzero(m, t);
    if (pi < 0) break;  // rest is zero
    std::swap(m[t], m[pi]);
    if (pj != t)
      for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      // clear column t below the pivot
      for (int i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt q = m[i][t] / m[t][t];
        if (q != 0)
          for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {  // remainder smaller than pivot: promote it
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      if (!clean) continue;
      // clear row t right of the pivot
      for (int j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        BigInt q = m[t][j] / m[t][t];
        if (q != 0)
          for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility: the pivot must divide every remaining entry
      for (int i = t + 1; i < rows && clean; ++i) {
        for (int j = t + 1; j < cols && clean; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (int jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
            clean = false;
          }
        }
      }
    }
    ++t;
  }

  std::vector<BigInt> diag;
  for (int k = 0; k < std::min(rows, cols); ++k) diag.push_back(abs_int(m[k][k]));
  return diag;
}

std::string AbelianInvariants::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < torsion.size(); ++k) os << (k ? ", " : "") << torsion[k];
  os << "] rank " << rank;
  return os.str();
}

AbelianInvariants abelian_invariants(const Presentation& p) {
  const int n = p.generator_count();
  std::vector<std::vector<BigInt>> m;
  for (const GroupWord& r : p.relators) {
    std::vector<BigInt> row(n, 0);
    for (const Letter& l : r.letters()) {
      if (l.gen >= n) throw std::invalid_argument("abelian_invariants: relator indexes unknown generator");
      row[l.gen] += l.exp;
    }
    m.push_back(std::move(row));
  }
  AbelianInvariants inv;
  if (m.empty()) {
    inv.rank = n;
    return inv;
  }
  std::vector<BigInt> diag = smith_normal_form(std::move(m));
  int nonzero = 0;
  for (const BigInt& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) inv.torsion.push_back(d);
  }
  inv.rank = n - nonzero;
  return inv;
}

}  // namespace picard
