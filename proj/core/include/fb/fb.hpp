#pragma once

#include "fb/classes.hpp"
#include "fb/coxeter.hpp"
#include "fb/enumerate.hpp"
#include "fb/error.hpp"
#include "fb/oracle.hpp"
#include "fb/render.hpp"
#include "fb/rootseq.hpp"
#include "fb/triples.hpp"
#include "fb/typea.hpp"
