#include "mtk/vankampen.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace mtk {

GWord GWord::reduced() const {
  GWord r;
  r.letters.reserve(letters.size());
  for (const auto& l : letters) {
    if (!r.letters.empty() && r.letters.back().pos == l.pos &&
        r.letters.back().sign == -l.sign)
      r.letters.pop_back();
    else
      r.letters.push_back(l);
  }
  return r;
}

GWord GWord::inverse() const {
  GWord r;
  r.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    r.letters.push_back(GLetter{it->pos, -it->sign});
  return r;
}

GWord GWord::unsigned_display() const {
  GWord r = *this;
  for (auto& l : r.letters) l.sign = 1;
  return r;
}

GWord operator*(const GWord& a, const GWord& b) {
  GWord r = a;
  for (const auto& l : b.letters) r.letters.push_back(l);
  return r.reduced();
}

GWord gconjugate(const GWord& a, const GWord& b) {
  return (b.inverse() * a * b).reduced();
}

namespace {

// Letter action pinned by the golden fixtures:
//   sigma_m:    x_m -> x_{m+1},           x_{m+1} -> x_{m+1}^-1 x_m x_{m+1}
//   sigma_m^-1: x_m -> x_m x_{m+1} x_m^-1, x_{m+1} -> x_m
GWord apply_action_letter(const GWord& w, int letter) {
  int m = letter > 0 ? letter : -letter;
  bool positive = letter > 0;
  GWord out;
  out.letters.reserve(w.letters.size() * 3);
  for (const auto& l : w.letters) {
    auto emit = [&](int pos, int sign) { out.letters.push_back(GLetter{pos, sign}); };
    auto emit_word = [&](std::initializer_list<GLetter> ls) {
      if (l.sign > 0) {
        for (const auto& x : ls) emit(x.pos, x.sign);
      } else {
        for (auto it = std::rbegin(ls); it != std::rend(ls); ++it)
          emit(it->pos, -it->sign);
      }
    };
    if (l.pos == m) {
      if (positive)
        emit_word({GLetter{m + 1, 1}});
      else
        emit_word({GLetter{m, 1}, GLetter{m + 1, 1}, GLetter{m, -1}});
    } else if (l.pos == m + 1) {
      if (positive)
        emit_word({GLetter{m + 1, -1}, GLetter{m, 1}, GLetter{m + 1, 1}});
      else
        emit_word({GLetter{m, 1}});
    } else {
      emit(l.pos, l.sign);
    }
  }
  return out.reduced();
}

}  // namespace

// Frozen conventions, pinned by the golden fixtures (see the tests):
//  - sigma_m acts on the loop generators by x_m -> x_{m+1},
//    x_{m+1} -> x_{m+1}^-1 x_m x_{m+1};
//  - a word acts first letter first, so action(c1 c2) = action(c2) o
//    action(c1), matching (A)_{BC} = ((A)_B)_C;
//  - a superscript element X transports loops by M(X) = action(rev X)
//    (the word read backwards, signs kept), and stacked superscripts
//    (A)^{B1 B2 ...} apply M(B1) first.
namespace {

ArtinWord reversed(const ArtinWord& w) {
  ArtinWord r(w.strands);
  r.letters.assign(w.letters.rbegin(), w.letters.rend());
  return r;
}

}  // namespace

GWord apply_braid_action(const GWord& w, const ArtinWord& braid) {
  GWord cur = w;
  for (int l : braid.letters) cur = apply_action_letter(cur, l);
  return cur.reduced();
}

GWord transport(const GWord& w, const ArtinWord& superscript) {
  return apply_braid_action(w, reversed(superscript));
}

std::pair<GWord, GWord> loops_from_factor(const Factor& f, SideConvention conv) {
  if (f.is_stub)
    throw std::invalid_argument("loops_from_factor: stub factor has no path");
  ArtinWord w = band_approach_word(f.twist, conv);
  int p = band_core_position(f.twist);
  GWord a = transport(GWord::gen(p), w);
  GWord b = transport(GWord::gen(p + 1), w);
  for (const ArtinWord& c : f.conjugators) {
    a = transport(a, c);
    b = transport(b, c);
  }
  return {a, b};
}

std::pair<GWord, GWord> loops_from_path(const PathDescriptor& p,
                                        const PunctureConfig& c,
                                        SideConvention conv) {
  Factor f;
  f.twist = BandTwist{p, c};
  f.exponent = 1;
  return loops_from_factor(f, conv);
}

Relation relation_from_factor(const Factor& f, CuspForm, SideConvention conv) {
  if (f.is_stub)
    throw std::invalid_argument("relation_from_factor: stub factor");
  if (f.exponent < 1 || f.exponent > 3)
    throw std::invalid_argument("relation_from_factor: exponent must be 1, 2 or 3");
  auto [a, b] = loops_from_factor(f, conv);
  Relation r;
  r.lhs = a;
  r.rhs = b;
  r.kind = f.exponent == 1   ? RelKind::Branch
           : f.exponent == 2 ? RelKind::Node
                             : RelKind::Cusp;
  r.origin = f.origin_group.empty() ? f.origin_detail
                                    : f.origin_group + "/" + f.origin_detail;
  return r;
}

GPresentation presentation_from_factorization(const Factorization& f,
                                              PresentationMode mode,
                                              CuspForm form, SideConvention conv) {
  GPresentation p;
  p.config = f.config;
  for (const auto& fac : f.factors) {
    if (fac.is_stub)
      throw std::invalid_argument(
          "presentation_from_factorization: stub factor present (" +
          fac.origin_detail + "); factors must carry path data");
    p.relations.push_back(relation_from_factor(fac, form, conv));
  }
  if (mode == PresentationMode::Quotient) {
    for (int pos = 1; pos <= f.config.count(); ++pos) {
      Relation r;
      r.kind = RelKind::Square;
      r.lhs = GWord{{GLetter{pos, 1}, GLetter{pos, 1}}};
      r.rhs = GWord{};
      r.origin = "square/" + f.config.label(pos);
      p.relations.push_back(std::move(r));
    }
  }
  return p;
}

GWord pair_substitution(const GWord& w, const PunctureConfig& c,
                        const std::string& pair_label, int m) {
  auto partner = c.partner(pair_label);
  if (!partner)
    throw std::invalid_argument("pair_substitution: no partner for " + pair_label);
  int p = c.position(pair_label);
  int q = c.position(*partner);
  if (p > q) std::swap(p, q);
  GWord cur = w;
  auto step = [&](const GWord& in, bool forward) {
    GWord out;
    for (const auto& l : in.letters) {
      auto append = [&](std::initializer_list<GLetter> ls) {
        if (l.sign > 0) {
          for (const auto& x : ls) out.letters.push_back(x);
        } else {
          for (auto it = std::rbegin(ls); it != std::rend(ls); ++it)
            out.letters.push_back(GLetter{it->pos, -it->sign});
        }
      };
      if (l.pos == p) {
        if (forward)
          append({GLetter{q, 1}});
        else
          append({GLetter{p, -1}, GLetter{q, 1}, GLetter{p, 1}});
      } else if (l.pos == q) {
        if (forward)
          append({GLetter{q, 1}, GLetter{p, 1}, GLetter{q, -1}});
        else
          append({GLetter{p, 1}});
      } else {
        out.letters.push_back(l);
      }
    }
    return out.reduced();
  };
  for (int k = 0; k < (m >= 0 ? m : -m); ++k) cur = step(cur, m >= 0);
  return cur;
}

std::vector<Relation> invariance_orbit(const std::vector<Relation>& rels,
                                       const PunctureConfig& c, int bound) {
  if (bound < 0) throw std::invalid_argument("invariance_orbit: negative bound");
  std::vector<std::string> pairs;
  for (int pos = 1; pos <= c.count(); ++pos) {
    const std::string& lab = c.label(pos);
    if (lab.ends_with("'")) continue;
    if (c.partner(lab)) pairs.push_back(lab);
  }
  std::vector<Relation> out;
  if (pairs.empty()) return rels;
  // The zero tuple first (the original relations), then the other exponent
  // tuples in lexicographic order.
  for (const auto& r : rels) out.push_back(r);
  if (bound == 0) return out;
  std::vector<int> tuple(pairs.size(), 0);
  std::function<void(size_t, bool)> rec = [&](size_t idx, bool all_zero) {
    if (idx == pairs.size()) {
      if (all_zero) return;
      std::ostringstream tag;
      tag << "rho(";
      for (size_t i = 0; i < pairs.size(); ++i) {
        if (i) tag << ",";
        tag << tuple[i];
      }
      tag << ")";
      for (const auto& r : rels) {
        Relation s = r;
        for (size_t i = 0; i < pairs.size(); ++i) {
          if (tuple[i] == 0) continue;
          s.lhs = pair_substitution(s.lhs, c, pairs[i], tuple[i]);
          s.rhs = pair_substitution(s.rhs, c, pairs[i], tuple[i]);
        }
        s.origin = r.origin + " " + tag.str();
        out.push_back(std::move(s));
      }
      return;
    }
    for (int m = -bound; m <= bound; ++m) {
      tuple[idx] = m;
      rec(idx + 1, all_zero && m == 0);
    }
  };
  rec(0, true);
  return out;
}

std::vector<Relation> conjugate_generators(const std::vector<Relation>& rels,
                                           const ArtinWord& c) {
  std::vector<Relation> out;
  out.reserve(rels.size());
  for (const auto& r : rels) {
    Relation s = r;
    s.lhs = apply_braid_action(r.lhs, c);
    s.rhs = apply_braid_action(r.rhs, c);
    out.push_back(std::move(s));
  }
  return out;
}

std::string gword_text(const GWord& w, const PunctureConfig& c,
                       bool display_unsigned) {
  const GWord v = display_unsigned ? w.reduced().unsigned_display() : w.reduced();
  if (v.letters.empty()) return "()";
  std::ostringstream os;
  for (size_t i = 0; i < v.letters.size(); ++i) {
    if (i) os << ' ';
    os << c.label(v.letters[i].pos);
    if (v.letters[i].sign < 0) os << "^-1";
  }
  return os.str();
}

std::string relation_text(const Relation& r, const PunctureConfig& c,
                          bool display_unsigned) {
  auto word = [&](const GWord& w) { return gword_text(w, c, display_unsigned); };
  std::ostringstream os;
  switch (r.kind) {
    case RelKind::Branch:
      os << word(r.lhs) << " = " << word(r.rhs);
      break;
    case RelKind::Node:
      os << word((r.lhs * r.rhs).reduced()) << " = "
         << word((r.rhs * r.lhs).reduced());
      break;
    case RelKind::Cusp:
      os << word((r.lhs * r.rhs * r.lhs).reduced()) << " = "
         << word((r.rhs * r.lhs * r.rhs).reduced());
      break;
    case RelKind::Square:
    case RelKind::Custom:
      os << word(r.lhs) << " = " << word(r.rhs);
      break;
  }
  return os.str();
}

std::string presentation_text(const GPresentation& p, bool display_unsigned) {
  std::ostringstream os;
  os << "gen:";
  for (int pos = 1; pos <= p.config.count(); ++pos) os << ' ' << p.config.label(pos);
  os << '\n';
  for (const auto& r : p.relations)
    os << "rel: " << relation_text(r, p.config, display_unsigned) << '\n';
  return os.str();
}

GWord parse_gword(const std::string& text, const PunctureConfig& c) {
  GWord w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "()") continue;
    int sign = 1;
    auto caret = tok.find('^');
    std::string label = tok;
    if (caret != std::string::npos) {
      std::string e = tok.substr(caret + 1);
      label = tok.substr(0, caret);
      int k = std::stoi(e);
      if (k == -1)
        sign = -1;
      else if (k != 1)
        throw std::invalid_argument("parse_gword: only ^-1 exponents supported");
    }
    w.letters.push_back(GLetter{c.position(label), sign});
  }
  return w;
}

}  // namespace mtk
