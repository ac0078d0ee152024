#pragma once

#include "bcvw/exact_matrix.hpp"
#include "bcvw/gauss_rat.hpp"
#include "bcvw/hecke.hpp"
#include "bcvw/herm_forms.hpp"
#include "bcvw/lie_algebra.hpp"
#include "bcvw/presentation.hpp"
#include "bcvw/ps_model.hpp"
#include "bcvw/report.hpp"
#include "bcvw/signed_perm.hpp"
#include "bcvw/tensor_ops.hpp"
