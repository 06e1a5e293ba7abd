#ifndef ITLIM_ITLIM_HPP
#define ITLIM_ITLIM_HPP

#include <itlim/entropy.hpp>
#include <itlim/error.hpp>
#include <itlim/io.hpp>
#include <itlim/limits.hpp>
#include <itlim/quad.hpp>
#include <itlim/series.hpp>

#endif
