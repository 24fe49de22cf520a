#pragma once

// Stop-word detection by average TF-IDF and first-appearance index statistics.

#include "stoplex/error.hpp"
#include "stoplex/summation.hpp"
#include "stoplex/tokenize.hpp"
#include "stoplex/corpus.hpp"
#include "stoplex/weighting.hpp"
#include "stoplex/distribution.hpp"
#include "stoplex/selector.hpp"
#include "stoplex/position.hpp"
#include "stoplex/svg.hpp"
#include "stoplex/report.hpp"
