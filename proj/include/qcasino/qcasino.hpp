#pragma once

#include "qcasino/bitseq.hpp"
#include "qcasino/classical_casino.hpp"
#include "qcasino/cmatrix.hpp"
#include "qcasino/common.hpp"
#include "qcasino/ledger_csv.hpp"
#include "qcasino/linalg.hpp"
#include "qcasino/matrix_json.hpp"
#include "qcasino/qmetrics.hpp"
#include "qcasino/qprefix.hpp"
#include "qcasino/qstate.hpp"
#include "qcasino/quantum_casino.hpp"
#include "qcasino/rng.hpp"
#include "qcasino/sampling.hpp"
#include "qcasino/strategy.hpp"
#include "qcasino/version.hpp"
