#include "sigma_spectra/colouring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "sigma_spectra/errors.hpp"

namespace sigma_spectra {

ClassProfile ClassProfile::from_colours(const std::vector<Colour>& colours) {
  ClassProfile p;
  for (Colour c : colours) ++p.counts[c];
  p.total = static_cast<int>(colours.size());
  return p;
}

Colouring::Colouring(std::vector<std::vector<Colour>> classes) : classes_(std::move(classes)) {
  if (classes_.empty()) throw DimensionMismatch("a colouring needs at least one class");
  const std::size_t q = classes_.front().size();
  if (q == 0) throw DimensionMismatch("classes must be non-empty");
  for (auto& cls : classes_) {
    if (cls.size() != q) throw DimensionMismatch("every class must have exactly q entries");
    for (Colour c : cls) {
      if (c < 0) throw DomainError("colour identifiers must be non-negative");
    }
    std::sort(cls.begin(), cls.end());
  }
}

int Colouring::colour_count() const {
  std::set<Colour> seen;
  for (const auto& cls : classes_) seen.insert(cls.begin(), cls.end());
  return static_cast<int>(seen.size());
}

Colour Colouring::max_colour() const {
  Colour m = -1;
  for (const auto& cls : classes_) m = std::max(m, cls.back());
  return m;
}

bool Colouring::class_is_monochromatic(int i) const {
  const auto& cls = classes_.at(i);
  return cls.front() == cls.back();
}

int Colouring::monochromatic_class_count() const {
  int count = 0;
  for (int i = 0; i < n(); ++i) count += class_is_monochromatic(i) ? 1 : 0;
  return count;
}

int Colouring::occurrences_outside(int i, Colour c) const {
  int count = 0;
  for (int j = 0; j < n(); ++j) {
    if (j == i) continue;
    if (std::binary_search(classes_[j].begin(), classes_[j].end(), c)) ++count;
  }
  return count;
}

Colouring Colouring::normalized() const {
  std::map<Colour, Colour> label;
  auto out = classes_;
  for (auto& cls : out) {
    for (Colour& c : cls) {
      auto [it, inserted] = label.try_emplace(c, static_cast<Colour>(label.size()));
      c = it->second;
    }
  }
  return Colouring(std::move(out));
}

namespace {

// Lexicographically least relabelling over class orders and colour bijections.
// Branches are pruned when two candidate classes are swapped by an automorphism
// (identical mapped part, all unmapped colours private) and when unmapped
// colours are twins (identical multiplicity in every class).
class Canonicalizer {
 public:
  explicit Canonicalizer(const std::vector<std::vector<Colour>>& classes) : n_(static_cast<int>(classes.size())) {
    std::map<Colour, int> dense;
    for (const auto& cls : classes) {
      for (Colour c : cls) dense.try_emplace(c, static_cast<int>(dense.size()));
    }
    k_ = static_cast<int>(dense.size());
    q_ = static_cast<int>(classes.front().size());
    mult_.assign(static_cast<std::size_t>(n_) * k_, 0);
    members_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      for (Colour c : classes[i]) ++mult_[idx(i, dense.at(c))];
      for (int c = 0; c < k_; ++c) {
        if (mult_[idx(i, c)] > 0) members_[i].push_back(c);
      }
    }
    spread_.assign(k_, 0);
    for (int c = 0; c < k_; ++c) {
      for (int i = 0; i < n_; ++i) spread_[c] += mult_[idx(i, c)] > 0 ? 1 : 0;
    }
    // twin ids: colours with identical multiplicity columns
    twin_.assign(k_, -1);
    std::map<std::vector<int>, int> columns;
    for (int c = 0; c < k_; ++c) {
      std::vector<int> col(n_);
      for (int i = 0; i < n_; ++i) col[i] = mult_[idx(i, c)];
      twin_[c] = columns.try_emplace(std::move(col), static_cast<int>(columns.size())).first->second;
    }
  }

  std::vector<std::vector<Colour>> run() {
    label_.assign(k_, -1);
    used_.assign(n_, false);
    current_.clear();
    best_.clear();
    search(0, 0, true);
    std::vector<std::vector<Colour>> out(n_);
    for (int i = 0; i < n_; ++i) out[i].assign(best_.begin() + i * q_, best_.begin() + (i + 1) * q_);
    return out;
  }

 private:
  std::size_t idx(int cls, int c) const { return static_cast<std::size_t>(cls) * k_ + c; }

  // Unmapped colours of `cls`, ordered by decreasing multiplicity then id.
  std::vector<int> unmapped(int cls) const {
    std::vector<int> out;
    for (int c : members_[cls]) {
      if (label_[c] < 0) out.push_back(c);
    }
    std::stable_sort(out.begin(), out.end(),
                     [&](int a, int b) { return mult_[idx(cls, a)] > mult_[idx(cls, b)]; });
    return out;
  }

  std::vector<int> key(int cls, int next_label) const {
    std::vector<int> seq;
    seq.reserve(q_);
    for (int c : members_[cls]) {
      if (label_[c] >= 0) seq.insert(seq.end(), mult_[idx(cls, c)], label_[c]);
    }
    std::sort(seq.begin(), seq.end());
    for (int c : unmapped(cls)) seq.insert(seq.end(), mult_[idx(cls, c)], next_label++);
    return seq;
  }

  bool all_unmapped_private(int cls) const {
    for (int c : members_[cls]) {
      if (label_[c] < 0 && spread_[c] != 1) return false;
    }
    return true;
  }

  void search(int depth, int next_label, bool tied) {
    if (depth == n_) {
      if (best_.empty() || current_ < best_) best_ = current_;
      return;
    }
    std::vector<int> min_key;
    std::vector<int> candidates;
    for (int i = 0; i < n_; ++i) {
      if (used_[i]) continue;
      auto kk = key(i, next_label);
      if (candidates.empty() || kk < min_key) {
        min_key = std::move(kk);
        candidates.assign(1, i);
      } else if (kk == min_key) {
        candidates.push_back(i);
      }
    }
    bool still_tied = tied;
    if (tied && !best_.empty()) {
      const auto offset = static_cast<std::ptrdiff_t>(depth) * q_;
      const std::vector<int> best_seg(best_.begin() + offset, best_.begin() + offset + q_);
      if (best_seg < min_key) return;
      if (min_key < best_seg) still_tied = false;
    }
    bool private_branch_taken = false;
    for (int cls : candidates) {
      if (all_unmapped_private(cls)) {
        if (private_branch_taken) continue;
        private_branch_taken = true;
      }
      used_[cls] = true;
      current_.insert(current_.end(), min_key.begin(), min_key.end());
      assign_groups(cls, unmapped(cls), 0, next_label, depth, still_tied);
      current_.resize(current_.size() - q_);
      used_[cls] = false;
    }
  }

  // Enumerates label orders within each run of equal multiplicity, skipping
  // orders that differ only by swapping twins.
  void assign_groups(int cls, const std::vector<int>& pending, std::size_t start, int next_label, int depth,
                     bool tied) {
    if (start == pending.size()) {
      search(depth + 1, next_label, tied);
      return;
    }
    std::size_t end = start;
    while (end < pending.size() && mult_[idx(cls, pending[end])] == mult_[idx(cls, pending[start])]) ++end;
    std::vector<int> group(pending.begin() + start, pending.begin() + end);
    std::sort(group.begin(), group.end(), [&](int a, int b) {
      return twin_[a] != twin_[b] ? twin_[a] < twin_[b] : a < b;
    });
    std::vector<int> twin_ids(group.size());
    for (std::size_t i = 0; i < group.size(); ++i) twin_ids[i] = twin_[group[i]];
    do {
      // colours of each twin class are taken in fixed order
      std::map<int, std::size_t> taken;
      std::vector<int> order;
      for (int t : twin_ids) {
        std::size_t seen = 0;
        for (int c : group) {
          if (twin_[c] == t && seen++ == taken[t]) {
            order.push_back(c);
            break;
          }
        }
        ++taken[t];
      }
      int lbl = next_label;
      for (int c : order) label_[c] = lbl++;
      assign_groups(cls, pending, end, lbl, depth, tied);
      for (int c : order) label_[c] = -1;
    } while (std::next_permutation(twin_ids.begin(), twin_ids.end()));
  }

  int n_ = 0;
  int q_ = 0;
  int k_ = 0;
  std::vector<int> mult_;
  std::vector<std::vector<int>> members_;
  std::vector<int> spread_;
  std::vector<int> twin_;
  std::vector<int> label_;
  std::vector<bool> used_;
  std::vector<int> current_;
  std::vector<int> best_;
};

}  // namespace

Colouring Colouring::canonical() const {
  if (classes_.empty()) return *this;
  return Colouring(Canonicalizer(classes_).run());
}

ClassProfile profile_of(const Colouring& colouring, int class_index) {
  if (class_index < 0 || class_index >= colouring.n()) {
    throw IndexOutOfRange("class index " + std::to_string(class_index) + " out of range [0, " +
                          std::to_string(colouring.n()) + ")");
  }
  return ClassProfile::from_colours(colouring.class_colours(class_index));
}

}  // namespace sigma_spectra
