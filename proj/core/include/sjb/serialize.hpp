#pragma once

#include "sjb/btk.hpp"
#include "sjb/terwilliger.hpp"
#include "sjb/yjm.hpp"

#include <string>

namespace sjb {

/// {spec, chains:[{k, b, vectors:[{rank, terms:[{point, coeff_num, coeff_den}]}]}]}
/// Rationals are serialized as decimal numerator/denominator strings so
/// arbitrary precision survives the round trip.
std::string sjb_to_json(const SymmetricJordanBasis& sjb, int indent = 2);
SymmetricJordanBasis sjb_from_json(const std::string& text);

std::string report_to_json(const std::string& subject, const VerificationReport& rep,
                           int indent = 2);

/// {n,i,j,t, blocks:[{k, p_k, row, col, entry:{coeff_num, coeff_den, radicand}}]}
std::string blocks_to_json(const BlockImage& image, int indent = 2);

std::string gz_to_json(int n, const GzResult& gz, int indent = 2);

std::string dims_to_json(const DimsTable& dims, int indent = 2);

} // namespace sjb
