#pragma once

#include "abjad/alphabet.hpp"
#include "abjad/corpus.hpp"
#include "abjad/error.hpp"
#include "abjad/numerics.hpp"
#include "abjad/rational.hpp"
#include "abjad/report.hpp"
#include "abjad/scan.hpp"
#include "abjad/unicode.hpp"
