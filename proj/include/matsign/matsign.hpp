#pragma once

#include "matsign/charpoly.hpp"
#include "matsign/errors.hpp"
#include "matsign/expected_charpoly.hpp"
#include "matsign/io.hpp"
#include "matsign/matching.hpp"
#include "matsign/matrix.hpp"
#include "matsign/oracle.hpp"
#include "matsign/partial_signing.hpp"
#include "matsign/polynomial.hpp"
#include "matsign/rational.hpp"
#include "matsign/signing.hpp"
#include "matsign/spectral.hpp"
