#pragma once

#include "certifier.hpp"
#include "domain.hpp"
#include "errors.hpp"
#include "ladic.hpp"
#include "laurent.hpp"
#include "modforms.hpp"
#include "modulus.hpp"
#include "multipartition.hpp"
#include "selftest.hpp"
#include "series.hpp"
