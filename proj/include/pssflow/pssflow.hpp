#pragma once

// Umbrella header for the pseudo-steady productivity-index library.

#include <pssflow/config.hpp>
#include <pssflow/errors.hpp>
#include <pssflow/kinematics.hpp>
#include <pssflow/measurements_csv.hpp>
#include <pssflow/model.hpp>
#include <pssflow/ode.hpp>
#include <pssflow/oracle.hpp>
#include <pssflow/prefit.hpp>
#include <pssflow/productivity.hpp>
#include <pssflow/quadrature.hpp>
#include <pssflow/reference_tables.hpp>
#include <pssflow/sweep.hpp>
#include <pssflow/table_report.hpp>
#include <pssflow/validation.hpp>
#include <pssflow/zone_integrals.hpp>
