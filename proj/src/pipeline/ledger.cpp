#include "sinoforge/pipeline/ledger.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace sinoforge::pipeline {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

namespace {

std::ofstream open_csv(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    return os;
}

} // namespace

void write_ledger_csv(const CostLedger& ledger, const std::string& path) {
    auto os = open_csv(path);
    os << "denoiser_evals,background_evals,pixel_steps,skipped_patches,"
          "retained_patches,modeled_peak,wall_time_s\n";
    os << ledger.denoiser_evals << ',' << ledger.background_evals << ','
       << ledger.pixel_steps << ',' << ledger.skipped_patches << ','
       << ledger.retained_patches << ',' << format_double(ledger.modeled_peak) << ','
       << format_double(ledger.wall_time_s) << "\n";
    if (!os) throw std::runtime_error("write failed: " + path);
}

void write_patches_csv(const std::vector<PatchRecord>& records, const std::string& path) {
    auto os = open_csv(path);
    os << "row,col,gamma,mask_ratio,adjusted,skip,entropy,spectral_l1,kappa,steps\n";
    for (const PatchRecord& r : records) {
        os << r.row << ',' << r.col << ',' << format_double(r.gamma) << ','
           << format_double(r.mask_ratio) << ',' << format_double(r.adjusted) << ','
           << (r.skip ? 1 : 0) << ',' << format_double(r.entropy) << ','
           << format_double(r.spectral_l1) << ',' << format_double(r.kappa) << ','
           << r.steps << "\n";
    }
    if (!os) throw std::runtime_error("write failed: " + path);
}

} // namespace sinoforge::pipeline
