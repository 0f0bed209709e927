#pragma once

#include <starsched/algo/bba.hpp>
#include <starsched/algo/mbbsa.hpp>
#include <starsched/algo/moore.hpp>
#include <starsched/algo/oracle.hpp>
#include <starsched/algo/ordering.hpp>
#include <starsched/algo/rbsa.hpp>
#include <starsched/algo/search.hpp>
#include <starsched/bench/generator.hpp>
#include <starsched/bench/runner.hpp>
#include <starsched/core/plan.hpp>
#include <starsched/core/platform.hpp>
#include <starsched/core/simulate.hpp>
#include <starsched/core/timeline.hpp>
#include <starsched/divisible/divisible.hpp>
