// Regenerates the committed parametric PER tables under data/. The model
// and its calibration anchors live in per_table.cpp; this tool only picks
// the SNR grid and writes the file.

#include <iostream>
#include <string>

#include "musca/montecarlo.hpp"
#include "musca/per_table.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: per_table_gen OUTPUT_PATH\n";
        return 2;
    }
    const auto snr_grid = musca::grid(-2.0, 12.0, 1.0);
    const auto table = musca::make_parametric_table(snr_grid);
    const std::string header =
        "Capacity-margin parametric PER tables for the turbo data codes\n"
        "(QPSK, R_d = 1/2, 1/4, 1/6) and the (14,64) Reed-Muller signalling\n"
        "code (BPSK), calibrated to the quoted 5 dB operating points:\n"
        "  rm14_64   [1]      0.109      [0]    1e-4\n"
        "  turbo_r16 [1 2 e]  0.02\n"
        "  turbo_r14 [1 1]    1e-4\n"
        "Per-burst SINR with n equal-power interferers is snr/(1+n*snr);\n"
        "clamped Shannon capacities are averaged over the codeword and\n"
        "log10(PER) decays linearly in the margin over the code's spectral\n"
        "rate. Components above 2 interferers are erased ('e').\n"
        "Format: code_id,snr_db,c1|c2|...,per\n"
        "Regenerate with: per_table_gen <this file>";
    musca::save_per_table(table, argv[1], header);
    std::cout << "wrote " << argv[1] << " (" << table.rows().size() << " rows)\n";
    return 0;
}
