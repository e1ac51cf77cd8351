#ifndef MCDM_MCDM_HPP
#define MCDM_MCDM_HPP

#include "mcdm/decision_model.hpp"
#include "mcdm/error.hpp"
#include "mcdm/ingest.hpp"
#include "mcdm/repro.hpp"
#include "mcdm/reporting.hpp"
#include "mcdm/sensitivity.hpp"
#include "mcdm/topsis.hpp"
#include "mcdm/weighting.hpp"

#endif  // MCDM_MCDM_HPP
