#pragma once

#include "padic/asymptotics.hpp"
#include "padic/characters.hpp"
#include "padic/cyclotomic.hpp"
#include "padic/distributions.hpp"
#include "padic/error.hpp"
#include "padic/gamma.hpp"
#include "padic/jet.hpp"
#include "padic/qp.hpp"
#include "padic/singular.hpp"
#include "padic/testfn.hpp"
