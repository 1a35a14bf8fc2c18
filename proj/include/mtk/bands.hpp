#pragma once

// Puncture configurations on the real line, monotone band paths with
// above/below flags, and their translation into Artin words. Composite
// twists on paired punctures (the fat-band calculus) live here too.

#include "mtk/braid.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mtk {

// Punctures lie on the real axis in label order; positions are 1-based.
class PunctureConfig {
public:
  PunctureConfig() = default;
  explicit PunctureConfig(std::vector<std::string> labels);

  // "1","2",...,"n"
  static PunctureConfig plain(int n);
  // "1","1'","2","2'",...,"m","m'"
  static PunctureConfig paired(int m);

  int count() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int pos) const { return labels_.at(pos - 1); }
  const std::vector<std::string>& labels() const { return labels_; }
  int position(const std::string& label) const;  // throws on unknown label
  bool has_label(const std::string& label) const;

  // Primed partner of an unprimed label (or vice versa), if present.
  std::optional<std::string> partner(const std::string& label) const;

private:
  std::vector<std::string> labels_;
  std::map<std::string, int> pos_;
};

enum class Side { Below, Above };

// Sign convention for band conjugator letters. The notation carries no
// letter-level convention of its own; the golden van Kampen fixtures pin it
// (see the tests), and the CLI exposes the toggle.
enum class SideConvention { BelowPositive, AbovePositive };
SideConvention default_side_convention();

// A monotone path between two punctures, with a flag for every puncture
// strictly between them.
struct PathDescriptor {
  std::string left_end;
  std::string right_end;
  std::vector<Side> flags;  // one per intermediate position, left to right

  static PathDescriptor all_below(const PunctureConfig& c,
                                  const std::string& l, const std::string& r);
  // Below everywhere except the listed labels.
  static PathDescriptor with_above(const PunctureConfig& c,
                                   const std::string& l, const std::string& r,
                                   const std::vector<std::string>& above);
};

struct BandTwist {
  PathDescriptor path;
  PunctureConfig config;
};

// The positive half twist along the band: W sigma_i W^-1, with W built
// right-to-left over the intermediate positions.
ArtinWord band_word(const BandTwist& t,
                    SideConvention conv = default_side_convention());

// The approach word W alone, and the core position i (left endpoint).
ArtinWord band_approach_word(const BandTwist& t,
                             SideConvention conv = default_side_convention());
int band_core_position(const BandTwist& t);

// Flip every Above/Below flag (the mirror automorphism on descriptors).
BandTwist complex_conjugate(const BandTwist& t);
PathDescriptor complex_conjugate(const PathDescriptor& p);

// Fat bands: both endpoints may be blocks of consecutive punctures.
// left block = positions [lpos, lpos+lsize), right block likewise.
// flags cover the positions strictly between the blocks.
// exponent 2h resolves the core to the pure block twist
// (full twist of the joined block divided by the internal full twists);
// odd exponents use the block swap (for 1-1 blocks this is sigma^k).
ArtinWord fat_band_word(const PunctureConfig& c, int lpos, int lsize, int rpos,
                        int rsize, const std::vector<Side>& flags, int exponent,
                        SideConvention conv = default_side_convention());

// A band with flags set to `base` everywhere except the listed labels,
// which take the opposite side.
BandTwist make_band(const PunctureConfig& c, const std::string& l,
                    const std::string& r,
                    const std::vector<std::string>& opposite_labels = {},
                    Side base = Side::Below);

// Expand the composite full twist Z^2_{ii',jj'} (or with a singleton on
// either side) into its atomic band twists, flags inherited, block-internal
// punctures on the base side. The product of the atomic words equals the
// fat band word of the composite (verified by the normal-form tests).
std::vector<BandTwist> pair_twist_expand(const PunctureConfig& c,
                                         const std::vector<std::string>& left_group,
                                         const std::vector<std::string>& right_group,
                                         const std::vector<std::string>& opposite_labels = {},
                                         Side base = Side::Below);

// Z_{jj'}^m, the m-th power of the adjacent half twist of a pair.
ArtinWord rho_twist(const PunctureConfig& c, const std::string& j, int m,
                    SideConvention conv = default_side_convention());

}  // namespace mtk
