#ifndef LEIBNIZ_LEIBNIZ_HPP
#define LEIBNIZ_LEIBNIZ_HPP

#include "algebra.hpp"
#include "cohomology.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "linalg.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "suite.hpp"
#include "io/document.hpp"
#include "io/spec.hpp"

#endif
