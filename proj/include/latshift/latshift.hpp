#pragma once

// Umbrella header.

#include "latshift/clip.hpp"
#include "latshift/corpus.hpp"
#include "latshift/counting.hpp"
#include "latshift/covariogram.hpp"
#include "latshift/distribution.hpp"
#include "latshift/io.hpp"
#include "latshift/moments.hpp"
#include "latshift/montecarlo.hpp"
#include "latshift/pmf.hpp"
#include "latshift/polygon.hpp"
#include "latshift/rational.hpp"
#include "latshift/rng.hpp"
#include "latshift/spectral.hpp"
#include "latshift/vec.hpp"
