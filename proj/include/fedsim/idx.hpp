#ifndef FEDSIM_IDX_HPP
#define FEDSIM_IDX_HPP

#include <iosfwd>
#include <string>

#include "fedsim/dataset.hpp"

namespace fedsim {

// IDX byte streams (big-endian): images magic 0x00000803, labels magic
// 0x00000801, dimension sizes after the magic, pixel bytes row-major.
// Pixels are scaled to [0,1] by dividing by 255.
struct IdxData {
    ExampleList examples;
    int rows = 0;
    int cols = 0;
};

IdxData load_idx(std::istream& images, std::istream& labels);
IdxData load_idx_files(const std::string& image_path, const std::string& label_path);

// Inverse of load_idx for feature values in [0,1]; pixels re-quantized to
// bytes with round-to-nearest.
void save_idx(const ExampleList& data, int rows, int cols, std::ostream& images,
              std::ostream& labels);

}  // namespace fedsim

#endif
