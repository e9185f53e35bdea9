#pragma once

#include <cfree/cumulants.hpp>
#include <cfree/errors.hpp>
#include <cfree/json_io.hpp>
#include <cfree/measures.hpp>
#include <cfree/partitions.hpp>
#include <cfree/random.hpp>
#include <cfree/scalar.hpp>
#include <cfree/series.hpp>
#include <cfree/transforms.hpp>
