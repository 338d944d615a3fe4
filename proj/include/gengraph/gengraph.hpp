#pragma once

#include <gengraph/cayley_io.hpp>
#include <gengraph/corpus.hpp>
#include <gengraph/element_set.hpp>
#include <gengraph/error.hpp>
#include <gengraph/families.hpp>
#include <gengraph/genstats.hpp>
#include <gengraph/graph.hpp>
#include <gengraph/group.hpp>
#include <gengraph/group_spec.hpp>
#include <gengraph/planarity.hpp>
#include <gengraph/properties.hpp>
#include <gengraph/ratio.hpp>
#include <gengraph/structure.hpp>
#include <gengraph/verify.hpp>
