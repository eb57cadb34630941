#ifndef CATKIT_HARNESS_HPP
#define CATKIT_HARNESS_HPP

#include "catkit/harness/expression.hpp"
#include "catkit/harness/fixture_files.hpp"
#include "catkit/harness/json_input.hpp"
#include "catkit/harness/report.hpp"
#include "catkit/harness/runner.hpp"
#include "catkit/harness/spec_file.hpp"

#endif
