#include "hougaard/io.hpp"

#include <cstdio>
#include <cstring>

namespace hougaard::io {

std::string format_double(double x) {
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

void write_csv(std::ostream& os, const MetaLines& meta, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    for (const auto& [k, v] : meta) os << "# " << k << "=" << v << "\n";
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
        os << "\n";
    }
}

namespace {

MetaLines ensemble_meta(const PathEnsemble& ens) {
    MetaLines meta{
        {"version", kVersion},
        {"rng", ens.rng},
        {"master_seed", std::to_string(ens.master_seed)},
        {"base_stream", std::to_string(ens.base_stream)},
        {"p", format_double(ens.spec.p)},
        {"sigma2", format_double(ens.spec.sigma2)},
        {"mu", format_double(ens.spec.mu)},
        {"n_paths", std::to_string(ens.n_paths)},
    };
    for (const auto& [k, v] : ens.metadata) meta.emplace_back(k, v);
    return meta;
}

}  // namespace

void write_ensemble_csv(std::ostream& os, const PathEnsemble& ens, const MetaLines& extra_meta) {
    auto meta = ensemble_meta(ens);
    meta.insert(meta.end(), extra_meta.begin(), extra_meta.end());
    std::vector<std::string> header;
    header.reserve(ens.grid.times.size());
    for (double t : ens.grid.times) header.push_back("t=" + format_double(t));
    for (const auto& [k, v] : meta) os << "# " << k << "=" << v << "\n";
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << "\n";
    const std::size_t nt = ens.grid.times.size();
    for (std::size_t p = 0; p < ens.n_paths; ++p) {
        for (std::size_t j = 0; j < nt; ++j)
            os << (j ? "," : "") << format_double(ens.values[p * nt + j]);
        os << "\n";
    }
}

void write_ensemble_binary(std::ostream& os, const PathEnsemble& ens) {
    char magic[16] = {};
    std::memcpy(magic, "HOUGAARD-PATHS", 14);
    os.write(magic, 16);
    const char version = 1;
    os.write(&version, 1);
    const char reserved[7] = {};
    os.write(reserved, 7);
    auto write_u64 = [&os](std::uint64_t v) {
        char b[8];
        for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
        os.write(b, 8);
    };
    const std::size_t nt = ens.grid.times.size();
    write_u64(ens.n_paths);
    write_u64(nt);
    auto write_f64 = [&os, &write_u64](double x) {
        std::uint64_t bits;
        std::memcpy(&bits, &x, 8);
        write_u64(bits);
    };
    for (double t : ens.grid.times) write_f64(t);
    for (std::size_t j = 0; j < nt; ++j)
        for (std::size_t p = 0; p < ens.n_paths; ++p) write_f64(ens.values[p * nt + j]);
}

}  // namespace hougaard::io
