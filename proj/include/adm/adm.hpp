#pragma once

#include "adm/analysis.hpp"
#include "adm/bitseq.hpp"
#include "adm/codebook.hpp"
#include "adm/codec.hpp"
#include "adm/errors.hpp"
#include "adm/framing.hpp"
#include "adm/interval.hpp"
#include "adm/monte_carlo.hpp"
#include "adm/optimal.hpp"
#include "adm/prob.hpp"
