#pragma once

#include "field.hpp"
#include "space.hpp"
#include "extract.hpp"
#include "random_build.hpp"
#include "bounds.hpp"
#include "verify.hpp"
#include "exact.hpp"
#include "instance.hpp"
