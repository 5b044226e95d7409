#pragma once

#include "binomial.hpp"
#include "dataset.hpp"
#include "embedded_data.hpp"
#include "logistic.hpp"
#include "lrt.hpp"
#include "plots.hpp"
#include "ranking.hpp"
#include "special.hpp"
#include "svg.hpp"
#include "tsv.hpp"
