#include "dhwt/test_image.hpp"

#include <cmath>
#include <numbers>

#include "dhwt/rng.hpp"

namespace dhwt {

namespace {

constexpr int kSize = 256;

struct Rect {
    int r0, c0, rows, cols;
    bool contains(int r, int c) const {
        return r >= r0 && r < r0 + rows && c >= c0 && c < c0 + cols;
    }
};

// checker patches: 2px cells phased so analysis pairs straddle the cell
// boundaries; HH magnitude comes out as 2*contrast/pi
constexpr int kPatchRow = 144;
constexpr int kPatchRows = 16;
constexpr int kPatchCols = 24;
constexpr int kPatchGap = 4;
constexpr int kPatchCol0 = 4;
constexpr int kPatchContrast[9] = {254, 120, 60, 30, 16, 8, 4, 2, 1};

// 4px-cell block whose start offset (2 mod 4) pushes all its energy into
// the level-2 diagonal band at magnitude 8*contrast/pi^2 ~ 205.9
constexpr Rect kBlock{182, 182, 32, 32};

// 2px stripes for the level-1 horizontal/vertical bands
constexpr Rect kVStripes{216, 8, 32, 32};
constexpr Rect kHStripes{216, 48, 32, 32};

int checker_patch_value(int r, int c, int r0, int c0, int contrast) {
    const int phase = (((c - c0 + 1) >> 1) + ((r - r0 + 1) >> 1)) & 1;
    if (contrast % 2 != 0) return phase ? 128 + (contrast + 1) / 2 : 128;
    return phase ? 128 + contrast / 2 : 128 - contrast / 2;
}

int clamp255(long v) { return v < 0 ? 0 : (v > 255 ? 255 : static_cast<int>(v)); }

} // namespace

Image builtin_test_image() {
    Image img = make_image(kSize, kSize, 3);

    for (int ch = 0; ch < 3; ++ch) {
        SplitMix64 noise(0x44485754u + 0x1000193u * static_cast<std::uint64_t>(ch));
        MatD& p = img.planes[ch];
        for (int r = 0; r < kSize; ++r) {
            for (int c = 0; c < kSize; ++c) {
                // pristine feature rectangles first; everything else is
                // gradient + shapes + per-channel tint + seeded texture
                bool feature = false;
                int v = 0;
                for (int i = 0; i < 9; ++i) {
                    const int c0 = kPatchCol0 + i * (kPatchCols + kPatchGap);
                    const Rect patch{kPatchRow, c0, kPatchRows, kPatchCols};
                    if (patch.contains(r, c)) {
                        v = checker_patch_value(r, c, patch.r0, patch.c0,
                                                kPatchContrast[i]);
                        feature = true;
                        break;
                    }
                }
                if (!feature && kBlock.contains(r, c)) {
                    const int phase =
                        (((c - kBlock.c0) >> 2) + ((r - kBlock.r0) >> 2)) & 1;
                    v = phase ? 255 : 1;
                    feature = true;
                }
                if (!feature && kVStripes.contains(r, c)) {
                    v = (((c - kVStripes.c0 + 1) >> 1) & 1) ? 228 : 28;
                    feature = true;
                }
                if (!feature && kHStripes.contains(r, c)) {
                    v = (((r - kHStripes.r0 + 1) >> 1) & 1) ? 228 : 28;
                    feature = true;
                }
                if (feature) {
                    noise.next(); // keep the texture stream position independent
                    p(r, c) = v;
                    continue;
                }

                const double x = c;
                const double y = r;
                double g = 52.0 + 0.32 * x + 0.22 * y +
                           34.0 * std::sin(2.0 * std::numbers::pi * x / 97.0) *
                               std::sin(2.0 * std::numbers::pi * y / 131.0);
                if (r >= 16 && r < 72 && c >= 24 && c < 104) g += 70.0;
                const double dx = x - 176.0;
                const double dy = y - 96.0;
                if (dx * dx + dy * dy < 36.0 * 36.0) g -= 55.0;
                if (r >= 88 && r < 136 && c >= 132 && c < 248) g += 45.0;
                if (ch == 1) g += 12.0 * std::sin(2.0 * std::numbers::pi * x / 256.0);
                if (ch == 2) g += 18.0 * y / 255.0 - 9.0;
                g += noise.uniform(-10.0, 10.0);
                p(r, c) = clamp255(std::lround(g));
            }
        }
    }
    return img;
}

} // namespace dhwt
