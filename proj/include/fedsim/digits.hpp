#ifndef FEDSIM_DIGITS_HPP
#define FEDSIM_DIGITS_HPP

#include <cstdint>

#include "fedsim/dataset.hpp"

namespace fedsim {

// Deterministic 10-class 28x28 grayscale corpus: per-class glyph prototypes
// with random shifts and pixel noise. A stand-in when no IDX files are
// available; produced by rendering to IDX bytes and reading them back through
// load_idx, so experiments exercise the same ingestion path as real files.
struct DigitCorpus {
    ExampleList train;
    ExampleList test;
};

DigitCorpus make_digit_corpus(int train_per_class, int test_per_class, std::uint64_t seed);

}  // namespace fedsim

#endif
