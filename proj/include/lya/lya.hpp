#pragma once

#include "rational.hpp"
#include "linalg.hpp"
#include "tensor.hpp"
#include "algebra.hpp"
#include "representation.hpp"
#include "rota_baxter.hpp"
#include "post.hpp"
#include "cochain.hpp"
#include "complex.hpp"
#include "deformation.hpp"
#include "io.hpp"
