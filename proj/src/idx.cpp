#include "fedsim/idx.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "fedsim/errors.hpp"

namespace fedsim {

namespace {

constexpr std::uint32_t kImagesMagic = 0x00000803;  // 2051
constexpr std::uint32_t kLabelsMagic = 0x00000801;  // 2049

std::uint32_t read_u32_be(std::istream& in, const char* what) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4))
        throw FormatError(std::string("truncated IDX stream while reading ") + what);
    return (std::uint32_t(b[0]) << 24) | (std::uint32_t(b[1]) << 16) |
           (std::uint32_t(b[2]) << 8) | std::uint32_t(b[3]);
}

void write_u32_be(std::ostream& out, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v >> 24),
                          static_cast<unsigned char>(v >> 16),
                          static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

}  // namespace

IdxData load_idx(std::istream& images, std::istream& labels) {
    const std::uint32_t im = read_u32_be(images, "image magic");
    if (im != kImagesMagic)
        throw FormatError("bad image magic: expected 2051, got " + std::to_string(im));
    const std::uint32_t lm = read_u32_be(labels, "label magic");
    if (lm != kLabelsMagic)
        throw FormatError("bad label magic: expected 2049, got " + std::to_string(lm));

    const std::uint32_t n_images = read_u32_be(images, "image count");
    const std::uint32_t rows = read_u32_be(images, "rows");
    const std::uint32_t cols = read_u32_be(images, "cols");
    const std::uint32_t n_labels = read_u32_be(labels, "label count");
    if (n_images != n_labels)
        throw ConsistencyError("image count " + std::to_string(n_images) +
                               " != label count " + std::to_string(n_labels));

    const std::size_t d = std::size_t(rows) * cols;
    std::vector<unsigned char> pixel(d);
    IdxData out;
    out.rows = static_cast<int>(rows);
    out.cols = static_cast<int>(cols);
    out.examples.reserve(n_images);
    for (std::uint32_t i = 0; i < n_images; ++i) {
        if (!images.read(reinterpret_cast<char*>(pixel.data()), static_cast<std::streamsize>(d)))
            throw FormatError("truncated image payload at example " + std::to_string(i));
        char yb;
        if (!labels.read(&yb, 1))
            throw FormatError("truncated label payload at example " + std::to_string(i));
        LabeledExample e;
        e.features.resize(static_cast<Eigen::Index>(d));
        for (std::size_t k = 0; k < d; ++k) e.features[static_cast<Eigen::Index>(k)] = pixel[k] / 255.0;
        e.label = static_cast<unsigned char>(yb);
        out.examples.push_back(std::move(e));
    }
    return out;
}

IdxData load_idx_files(const std::string& image_path, const std::string& label_path) {
    std::ifstream fi(image_path, std::ios::binary);
    if (!fi) throw FormatError("cannot open " + image_path);
    std::ifstream fl(label_path, std::ios::binary);
    if (!fl) throw FormatError("cannot open " + label_path);
    return load_idx(fi, fl);
}

void save_idx(const ExampleList& data, int rows, int cols, std::ostream& images,
              std::ostream& labels) {
    const std::size_t d = std::size_t(rows) * cols;
    write_u32_be(images, kImagesMagic);
    write_u32_be(images, static_cast<std::uint32_t>(data.size()));
    write_u32_be(images, static_cast<std::uint32_t>(rows));
    write_u32_be(images, static_cast<std::uint32_t>(cols));
    write_u32_be(labels, kLabelsMagic);
    write_u32_be(labels, static_cast<std::uint32_t>(data.size()));
    std::vector<unsigned char> pixel(d);
    for (const auto& e : data) {
        if (static_cast<std::size_t>(e.features.size()) != d)
            throw ConsistencyError("feature dimension does not match rows*cols");
        for (std::size_t k = 0; k < d; ++k) {
            double v = e.features[static_cast<Eigen::Index>(k)] * 255.0;
            v = std::min(255.0, std::max(0.0, std::nearbyint(v)));
            pixel[k] = static_cast<unsigned char>(v);
        }
        images.write(reinterpret_cast<const char*>(pixel.data()), static_cast<std::streamsize>(d));
        const char yb = static_cast<char>(e.label);
        labels.write(&yb, 1);
    }
}

}  // namespace fedsim
