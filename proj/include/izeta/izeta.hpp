#ifndef IZETA_IZETA_HPP
#define IZETA_IZETA_HPP

// Umbrella header for the izeta library.

#include <izeta/errors.hpp>
#include <izeta/complexfn.hpp>
#include <izeta/quadrature.hpp>
#include <izeta/oracle.hpp>
#include <izeta/fraczeta.hpp>
#include <izeta/checks.hpp>
#include <izeta/grid.hpp>
#include <izeta/scan.hpp>

#endif // IZETA_IZETA_HPP
