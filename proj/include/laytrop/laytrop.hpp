#pragma once

#include "laytrop/cover.hpp"
#include "laytrop/error.hpp"
#include "laytrop/extended_cover.hpp"
#include "laytrop/format.hpp"
#include "laytrop/io.hpp"
#include "laytrop/matrix.hpp"
#include "laytrop/oracle.hpp"
#include "laytrop/preprocess.hpp"
#include "laytrop/random.hpp"
#include "laytrop/report.hpp"
#include "laytrop/scalar.hpp"
#include "laytrop/stickel.hpp"
#include "laytrop/supertropical_solver.hpp"
#include "laytrop/symmetrized_solver.hpp"
#include "laytrop/system.hpp"
#include "laytrop/tropical_solver.hpp"
