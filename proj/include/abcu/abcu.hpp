#ifndef ABCU_ABCU_HPP
#define ABCU_ABCU_HPP

#include "abcu/error.hpp"
#include "abcu/candidate_set.hpp"
#include "abcu/model.hpp"
#include "abcu/rules.hpp"
#include "abcu/decision.hpp"
#include "abcu/dispatch.hpp"
#include "abcu/possible.hpp"
#include "abcu/necessary.hpp"
#include "abcu/representation.hpp"
#include "abcu/reductions.hpp"
#include "abcu/io.hpp"

#endif // ABCU_ABCU_HPP
