#pragma once

#include "lsc/corpus.hpp"
#include "lsc/gradcheck.hpp"
#include "lsc/knowledge.hpp"
#include "lsc/metrics.hpp"
#include "lsc/nb.hpp"
#include "lsc/numeric.hpp"
#include "lsc/rng.hpp"
#include "lsc/optimizer.hpp"
#include "lsc/protocol.hpp"
#include "lsc/synthetic.hpp"
#include "lsc/tokenizer.hpp"
#include "lsc/types.hpp"
