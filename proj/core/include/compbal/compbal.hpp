#pragma once

#include <compbal/balance.hpp>
#include <compbal/composition_poly.hpp>
#include <compbal/errors.hpp>
#include <compbal/numeric.hpp>
#include <compbal/oracle.hpp>
#include <compbal/part_set.hpp>
#include <compbal/polyengine.hpp>
#include <compbal/properties.hpp>
#include <compbal/spectral.hpp>
