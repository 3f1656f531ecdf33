#include "fedsim/digits.hpp"

#include <array>
#include <sstream>
#include <string>

#include "fedsim/errors.hpp"
#include "fedsim/idx.hpp"
#include "fedsim/rng.hpp"

namespace fedsim {

namespace {

constexpr int kGrid = 7;   // coarse glyph resolution
constexpr int kScale = 4;  // 7*4 = 28
constexpr int kSide = kGrid * kScale;

// 7x7 stroke masks, one string per row, '#' = ink
const std::array<std::array<const char*, kGrid>, 10> kGlyphs = {{
    // 0
    {{" ##### ", "##   ##", "##   ##", "##   ##", "##   ##", "##   ##", " ##### "}},
    // 1
    {{"   ##  ", "  ###  ", "   ##  ", "   ##  ", "   ##  ", "   ##  ", " ######"}},
    // 2
    {{" ##### ", "##   ##", "     ##", "   ### ", "  ##   ", " ##    ", "#######"}},
    // 3
    {{" ##### ", "##   ##", "     ##", "  #### ", "     ##", "##   ##", " ##### "}},
    // 4
    {{"##  ## ", "##  ## ", "##  ## ", "#######", "    ## ", "    ## ", "    ## "}},
    // 5
    {{"#######", "##     ", "###### ", "     ##", "     ##", "##   ##", " ##### "}},
    // 6
    {{"  #### ", " ##    ", "##     ", "###### ", "##   ##", "##   ##", " ##### "}},
    // 7
    {{"#######", "     ##", "    ## ", "   ##  ", "  ##   ", "  ##   ", "  ##   "}},
    // 8
    {{" ##### ", "##   ##", "##   ##", " ##### ", "##   ##", "##   ##", " ##### "}},
    // 9
    {{" ##### ", "##   ##", "##   ##", " ######", "     ##", "    ## ", " ####  "}},
}};

LabeledExample render_digit(int cls, Rng& rng) {
    std::uniform_int_distribution<int> shift(-2, 2);
    std::normal_distribution<double> noise(0.0, 0.12);
    std::uniform_real_distribution<double> ink(0.75, 1.0);
    const int dx = shift(rng), dy = shift(rng);
    const double intensity = ink(rng);

    LabeledExample e;
    e.label = cls;
    e.features = Vec::Zero(kSide * kSide);
    for (int r = 0; r < kSide; ++r) {
        for (int c = 0; c < kSide; ++c) {
            const int gr = (r - dy) / kScale, gc = (c - dx) / kScale;
            double v = 0.0;
            if (r - dy >= 0 && c - dx >= 0 && gr < kGrid && gc < kGrid &&
                kGlyphs[cls][gr][gc] == '#')
                v = intensity;
            v += noise(rng);
            e.features[r * kSide + c] = std::min(1.0, std::max(0.0, v));
        }
    }
    return e;
}

ExampleList render_split(int per_class, std::uint64_t seed, std::uint64_t split_tag) {
    ExampleList out;
    out.reserve(static_cast<std::size_t>(per_class) * 10);
    for (int cls = 0; cls < 10; ++cls) {
        Rng rng = make_rng(seed, seed_tag::kDigits, split_tag, static_cast<std::uint64_t>(cls));
        for (int k = 0; k < per_class; ++k) out.push_back(render_digit(cls, rng));
    }
    return out;
}

// quantize through IDX bytes so features match what file ingestion yields
ExampleList through_idx(const ExampleList& data) {
    std::stringstream im(std::ios::in | std::ios::out | std::ios::binary);
    std::stringstream lb(std::ios::in | std::ios::out | std::ios::binary);
    save_idx(data, kSide, kSide, im, lb);
    im.seekg(0);
    lb.seekg(0);
    return load_idx(im, lb).examples;
}

}  // namespace

DigitCorpus make_digit_corpus(int train_per_class, int test_per_class, std::uint64_t seed) {
    if (train_per_class < 1 || test_per_class < 0)
        throw ParamError("digit corpus sizes must be positive");
    DigitCorpus out;
    out.train = through_idx(render_split(train_per_class, seed, 1));
    if (test_per_class > 0) out.test = through_idx(render_split(test_per_class, seed, 2));
    return out;
}

}  // namespace fedsim
