#pragma once

#include "loghat/matrix.hpp"

namespace loghat {

enum class PsdStatus { PD, PSDSingular, Indefinite };

struct PsdResult {
  PsdStatus status = PsdStatus::PD;
  std::size_t rank = 0;
  QVector witness;  // vᵀAv < 0; set only when indefinite
};

// Pivoted rational LDLᵀ. Throws PreconditionError on asymmetric input.
PsdResult psd_status(const QMatrix& a);
const char* to_string(PsdStatus s);

}  // namespace loghat
