#include "mtk/bands.hpp"

#include <algorithm>
#include <cassert>

namespace mtk {

PunctureConfig::PunctureConfig(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    if (!pos_.emplace(labels_[i], i + 1).second)
      throw std::invalid_argument("PunctureConfig: duplicate label " + labels_[i]);
  }
}

PunctureConfig PunctureConfig::plain(int n) {
  std::vector<std::string> ls;
  ls.reserve(n);
  for (int i = 1; i <= n; ++i) ls.push_back(std::to_string(i));
  return PunctureConfig(std::move(ls));
}

PunctureConfig PunctureConfig::paired(int m) {
  std::vector<std::string> ls;
  ls.reserve(2 * m);
  for (int i = 1; i <= m; ++i) {
    ls.push_back(std::to_string(i));
    ls.push_back(std::to_string(i) + "'");
  }
  return PunctureConfig(std::move(ls));
}

int PunctureConfig::position(const std::string& label) const {
  auto it = pos_.find(label);
  if (it == pos_.end())
    throw std::invalid_argument("PunctureConfig: unknown label " + label);
  return it->second;
}

bool PunctureConfig::has_label(const std::string& label) const {
  return pos_.count(label) != 0;
}

std::optional<std::string> PunctureConfig::partner(const std::string& label) const {
  std::string other = label.ends_with("'") ? label.substr(0, label.size() - 1)
                                           : label + "'";
  if (!has_label(other)) return std::nullopt;
  int p = position(label), q = position(other);
  if (q != p + 1 && q != p - 1) return std::nullopt;
  return other;
}

SideConvention default_side_convention() { return SideConvention::BelowPositive; }

PathDescriptor PathDescriptor::all_below(const PunctureConfig& c,
                                         const std::string& l,
                                         const std::string& r) {
  PathDescriptor p;
  p.left_end = l;
  p.right_end = r;
  int lp = c.position(l), rp = c.position(r);
  if (lp >= rp) throw std::invalid_argument("PathDescriptor: endpoints out of order");
  p.flags.assign(rp - lp - 1, Side::Below);
  return p;
}

PathDescriptor PathDescriptor::with_above(const PunctureConfig& c,
                                          const std::string& l,
                                          const std::string& r,
                                          const std::vector<std::string>& above) {
  PathDescriptor p = all_below(c, l, r);
  int lp = c.position(l);
  for (const auto& lab : above) {
    int m = c.position(lab);
    int idx = m - lp - 1;
    if (idx < 0 || idx >= static_cast<int>(p.flags.size()))
      throw std::invalid_argument("PathDescriptor: flag label not interior: " + lab);
    p.flags[idx] = Side::Above;
  }
  return p;
}

namespace {

int side_sign(Side s, SideConvention conv) {
  bool below_positive = conv == SideConvention::BelowPositive;
  return (s == Side::Below) == below_positive ? 1 : -1;
}

void append_full_twist(std::vector<int>& out, int offset, int k, int repeat_sign) {
  // full twist of k strands, starting at position offset (1-based letters
  // sigma_{offset}..sigma_{offset+k-2}); repeat_sign -1 emits the inverse.
  if (k < 2) return;
  std::vector<int> w;
  for (int rep = 0; rep < k; ++rep)
    for (int i = 0; i < k - 1; ++i) w.push_back(offset + i);
  if (repeat_sign > 0) {
    out.insert(out.end(), w.begin(), w.end());
  } else {
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  }
}

}  // namespace

ArtinWord fat_band_word(const PunctureConfig& c, int lpos, int lsize, int rpos,
                        int rsize, const std::vector<Side>& flags, int exponent,
                        SideConvention conv) {
  int n = c.count();
  if (lpos < 1 || lpos + lsize - 1 >= rpos || rpos + rsize - 1 > n)
    throw std::invalid_argument("fat_band_word: bad block layout");
  int gap = rpos - (lpos + lsize);
  if (static_cast<int>(flags.size()) != gap)
    throw std::invalid_argument("fat_band_word: flag count mismatch");

  ArtinWord w(n);
  // W: move the right block leftwards past each intermediate.
  for (int m = rpos - 1; m >= lpos + lsize; --m) {
    int sign = side_sign(flags[m - (lpos + lsize)], conv);
    for (int t = 0; t < rsize; ++t) w.letters.push_back(sign * (m + t));
  }
  size_t wlen = w.letters.size();

  // Core on the joined block [lpos, lpos+lsize+rsize).
  int k = exponent;
  int half = k >= 0 ? k / 2 : -((-k) / 2);
  bool odd = (k % 2) != 0;
  // Even part: pure block twist to the |half| power.
  for (int rep = 0; rep < (half >= 0 ? half : -half); ++rep) {
    int s = half >= 0 ? 1 : -1;
    if (s > 0) {
      append_full_twist(w.letters, lpos, lsize + rsize, 1);
      append_full_twist(w.letters, lpos, lsize, -1);
      append_full_twist(w.letters, lpos + lsize, rsize, -1);
    } else {
      append_full_twist(w.letters, lpos + lsize, rsize, 1);
      append_full_twist(w.letters, lpos, lsize, 1);
      append_full_twist(w.letters, lpos, lsize + rsize, -1);
    }
  }
  if (odd) {
    // Block swap: first block over the second.
    std::vector<int> img(lsize + rsize);
    for (int i = 0; i < lsize; ++i) img[i] = i + rsize;
    for (int i = 0; i < rsize; ++i) img[lsize + i] = i;
    std::vector<int> sw = garside::simple_word(Perm(img));
    if (k > 0) {
      for (int l : sw) w.letters.push_back(l + lpos - 1);
    } else {
      for (auto it = sw.rbegin(); it != sw.rend(); ++it)
        w.letters.push_back(-(*it + lpos - 1));
    }
  }

  // W^-1.
  std::vector<int> winv;
  winv.reserve(wlen);
  for (size_t i = wlen; i > 0; --i) winv.push_back(-w.letters[i - 1]);
  w.letters.insert(w.letters.end(), winv.begin(), winv.end());
  return w.reduced();
}

ArtinWord band_word(const BandTwist& t, SideConvention conv) {
  int lp = t.config.position(t.path.left_end);
  int rp = t.config.position(t.path.right_end);
  if (lp >= rp) throw std::invalid_argument("band_word: endpoints out of order");
  return fat_band_word(t.config, lp, 1, rp, 1, t.path.flags, 1, conv);
}

ArtinWord band_approach_word(const BandTwist& t, SideConvention conv) {
  int lp = t.config.position(t.path.left_end);
  int rp = t.config.position(t.path.right_end);
  if (lp >= rp) throw std::invalid_argument("band_approach_word: endpoints out of order");
  if (static_cast<int>(t.path.flags.size()) != rp - lp - 1)
    throw std::invalid_argument("band_approach_word: flag count mismatch");
  ArtinWord w(t.config.count());
  for (int m = rp - 1; m >= lp + 1; --m)
    w.letters.push_back(side_sign(t.path.flags[m - lp - 1], conv) * m);
  return w;
}

int band_core_position(const BandTwist& t) {
  return t.config.position(t.path.left_end);
}

PathDescriptor complex_conjugate(const PathDescriptor& p) {
  PathDescriptor q = p;
  for (auto& f : q.flags) f = f == Side::Below ? Side::Above : Side::Below;
  return q;
}

BandTwist complex_conjugate(const BandTwist& t) {
  return BandTwist{complex_conjugate(t.path), t.config};
}

BandTwist make_band(const PunctureConfig& c, const std::string& l,
                    const std::string& r,
                    const std::vector<std::string>& opposite_labels, Side base) {
  PathDescriptor p;
  p.left_end = l;
  p.right_end = r;
  int lp = c.position(l), rp = c.position(r);
  if (lp >= rp) throw std::invalid_argument("make_band: endpoints out of order");
  p.flags.assign(rp - lp - 1, base);
  Side other = base == Side::Below ? Side::Above : Side::Below;
  for (const auto& lab : opposite_labels) {
    int m = c.position(lab);
    if (m > lp && m < rp) p.flags[m - lp - 1] = other;
  }
  return BandTwist{std::move(p), c};
}

std::vector<BandTwist> pair_twist_expand(const PunctureConfig& c,
                                         const std::vector<std::string>& left_group,
                                         const std::vector<std::string>& right_group,
                                         const std::vector<std::string>& opposite_labels,
                                         Side base) {
  if (left_group.empty() || right_group.empty() || left_group.size() > 2 ||
      right_group.size() > 2)
    throw std::invalid_argument("pair_twist_expand: groups must have 1 or 2 labels");
  int lmax = 0, rmin = c.count() + 1;
  for (const auto& l : left_group) lmax = std::max(lmax, c.position(l));
  for (const auto& r : right_group) rmin = std::min(rmin, c.position(r));
  if (lmax >= rmin)
    throw std::invalid_argument("pair_twist_expand: overlapping groups");

  std::vector<BandTwist> out;
  for (const auto& r : right_group)
    for (const auto& l : left_group)
      out.push_back(make_band(c, l, r, opposite_labels, base));
  // The mirrored composite multiplies to the mirrored fat twist in the
  // mirrored (reversed) order.
  if (base == Side::Above) std::reverse(out.begin(), out.end());
  return out;
}

ArtinWord rho_twist(const PunctureConfig& c, const std::string& j, int m,
                    SideConvention conv) {
  auto partner = c.partner(j);
  if (!partner)
    throw std::invalid_argument("rho_twist: label has no adjacent partner: " + j);
  int a = c.position(j), b = c.position(*partner);
  if (a > b) std::swap(a, b);
  return fat_band_word(c, a, 1, b, 1, {}, m, conv);
}

}  // namespace mtk
