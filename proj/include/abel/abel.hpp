#pragma once

#include "abel/trigpoly.hpp"
#include "abel/ode.hpp"
#include "abel/flow.hpp"
#include "abel/parallel.hpp"
#include "abel/errors.hpp"
#include "abel/displacement.hpp"
#include "abel/multiplicity.hpp"
#include "abel/portrait.hpp"
#include "abel/homotopy.hpp"
#include "abel/rigid.hpp"
