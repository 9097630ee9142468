#pragma once

#include "starfree/alphabet.hpp"
#include "starfree/aperiodicity.hpp"
#include "starfree/automata.hpp"
#include "starfree/dfa.hpp"
#include "starfree/enumeration.hpp"
#include "starfree/errors.hpp"
#include "starfree/json_io.hpp"
#include "starfree/lang_ops.hpp"
#include "starfree/nfa.hpp"
#include "starfree/state_set.hpp"
#include "starfree/transformation.hpp"
#include "starfree/verify.hpp"
#include "starfree/witnesses.hpp"
#include "starfree/word.hpp"
