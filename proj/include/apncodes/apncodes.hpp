#pragma once

#include "apncodes/analysis.hpp"
#include "apncodes/corpus.hpp"
#include "apncodes/cyclic_code.hpp"
#include "apncodes/cyclotomy.hpp"
#include "apncodes/errors.hpp"
#include "apncodes/field.hpp"
#include "apncodes/functions.hpp"
#include "apncodes/minimal_poly.hpp"
#include "apncodes/poly.hpp"
#include "apncodes/predict.hpp"
#include "apncodes/prime_field.hpp"
#include "apncodes/report.hpp"
#include "apncodes/sequence.hpp"
