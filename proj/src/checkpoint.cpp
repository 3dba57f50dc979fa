#include "agg/checkpoint.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "agg/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "checkpoint I/O assumes a little-endian host");

namespace agg {
namespace {

constexpr char kMagic[4] = {'A', 'G', 'G', '2'};
constexpr std::uint32_t kVersion = 1;

void write_u32(std::ostream& out, std::uint32_t v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void write_f64(std::ostream& out, double v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::uint32_t read_u32(std::istream& in) {
    std::uint32_t v = 0;
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}

double read_f64(std::istream& in) {
    double v = 0;
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}

void write_block(std::ostream& out, const RealSamples& s) {
    out.write(reinterpret_cast<const char*>(s.data()),
              static_cast<std::streamsize>(s.size() * sizeof(double)));
}

void read_block(std::istream& in, RealSamples& s, std::size_t count) {
    s.resize(count);
    in.read(reinterpret_cast<char*>(s.data()), static_cast<std::streamsize>(count * sizeof(double)));
}

} // namespace

void write_checkpoint(const std::string& path, const CheckpointData& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("checkpoint: cannot open " + path + " for writing");
    out.write(kMagic, 4);
    write_u32(out, kVersion);
    write_u32(out, static_cast<std::uint32_t>(data.n));
    write_f64(out, data.time);
    write_f64(out, data.fluid.rho1);
    write_f64(out, data.fluid.rho2);
    write_f64(out, data.fluid.nu1);
    write_f64(out, data.fluid.nu2);
    write_f64(out, data.fluid.theta);
    write_f64(out, data.fluid.theta0);
    write_block(out, data.phi);
    write_block(out, data.ux);
    write_block(out, data.uy);
    if (!out) throw ConfigError("checkpoint: write failed for " + path);
}

CheckpointData read_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("checkpoint: cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw ConfigError("checkpoint: bad magic in " + path);
    const std::uint32_t version = read_u32(in);
    if (version != kVersion)
        throw ConfigError("checkpoint: unsupported version " + std::to_string(version));
    CheckpointData data;
    data.n = static_cast<int>(read_u32(in));
    data.time = read_f64(in);
    data.fluid.rho1 = read_f64(in);
    data.fluid.rho2 = read_f64(in);
    data.fluid.nu1 = read_f64(in);
    data.fluid.nu2 = read_f64(in);
    data.fluid.theta = read_f64(in);
    data.fluid.theta0 = read_f64(in);
    const std::size_t count = static_cast<std::size_t>(data.n) * static_cast<std::size_t>(data.n);
    read_block(in, data.phi, count);
    read_block(in, data.ux, count);
    read_block(in, data.uy, count);
    if (!in) throw ConfigError("checkpoint: truncated file " + path);
    return data;
}

} // namespace agg
