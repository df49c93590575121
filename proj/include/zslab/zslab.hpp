#pragma once

// zslab: zero-sum invariants of finite groups — umbrella header.

#include "zslab/bits.hpp"
#include "zslab/errors.hpp"
#include "zslab/fraction.hpp"
#include "zslab/group.hpp"
#include "zslab/invariants.hpp"
#include "zslab/io.hpp"
#include "zslab/parallel.hpp"
#include "zslab/products.hpp"
#include "zslab/sequence.hpp"
#include "zslab/smooth.hpp"
#include "zslab/theorems.hpp"
