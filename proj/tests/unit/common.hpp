#pragma once

#include <doctest.h>

#include "../support.hpp"
