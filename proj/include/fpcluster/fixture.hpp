#pragma once

// Bundled 10-document sample corpus with known reference outputs.
// Each constant mirrors the file of the same name under
// fixtures/sample10/ byte for byte (consistency is unit-tested).

#include <string_view>

namespace fpcluster::fixture {

inline constexpr std::string_view keywords_jsonl =
    R"FX({"id":"D1","keywords":["website","application","people","information"],"label":"social"}
{"id":"D2","keywords":["website","people","profile","community","interest"],"label":"social"}
{"id":"D3","keywords":["network","service","service","platform","website","network","relation","people"],"label":"social"}
{"id":"D4","keywords":["network","community","interest","commonality","internet","people","network"],"label":"social"}
{"id":"D5","keywords":["group","people","information","experience","purpose"],"label":"social"}
{"id":"D6","keywords":["network","community","contact","people","interest","prospect","information","support"],"label":"social"}
{"id":"D7","keywords":["computer","network","group","computer","device","channel","communication","user","user","resource","data"],"label":"computer"}
{"id":"D8","keywords":["computer","network","computer","server"],"label":"computer"}
{"id":"D9","keywords":["group","computer","cable","signal","network","protocol"],"label":"computer"}
{"id":"D10","keywords":["group","computer","network","network","data","computer","network"],"label":"computer"}
)FX";

inline constexpr std::string_view raw_jsonl =
    R"FX({"id":"D1","text":"A dedicated website or other application that enables people to communicate with each other by posting information","label":"social"}
{"id":"D2","text":"Uses special sites to allow people to create a profile and form communities based on common interests","label":"social"}
{"id":"D3","text":"A social network service is an online service, platform, or site that focuses on building and reflecting of social networks or social relations among people","label":"social"}
{"id":"D4","text":"Social networks can be thought of as communities based upon interest or commonality that use the Internet to connect the people of the network","label":"social"}
{"id":"D5","text":"A group of people who exchange information and experience for professional or social purposes","label":"social"}
{"id":"D6","text":"Networking is establishing an informal communities of contacts among people with common social and business interests as a source of prospects, for the exchange of information, and for support","label":"social"}
{"id":"D7","text":"A computer network is a group of computers and devices interconnected by communications channels that facilitate communication among users and allows users to share resources and data","label":"computer"}
{"id":"D8","text":"Computer Networking is the joining of two or more computers in order for them to communicate or jointly access a server.","label":"computer"}
{"id":"D9","text":"A group of two or more computers linked by cables or wireless signals or both, which can communicate with one another using network protocols","label":"computer"}
{"id":"D10","text":"A group of computers together with the sub-network or inter-network through which they can exchange data is called a computer network","label":"computer"}
)FX";

inline constexpr std::string_view stopwords_txt =
    R"FX(# stopwords for the bundled sample corpus
a
among
an
and
are
as
at
be
been
being
between
but
by
can
could
did
do
does
done
each
for
from
had
has
have
having
he
her
him
his
i
if
in
into
is
it
its
may
more
most
much
must
no
nor
not
of
on
one
or
other
our
over
shall
she
should
than
that
the
their
them
then
there
these
they
this
those
through
to
two
under
upon
was
we
were
which
who
whom
will
with
would
you
your
)FX";

inline constexpr std::string_view allowlist_txt =
    R"FX(# keyword allowlist for the bundled sample corpus
application
cables
channels
commonality
communication
communities
computer
computers
contacts
data
devices
experience
group
information
interest
interests
internet
network
networking
networks
people
platform
profile
prospects
protocols
purposes
relations
resources
server
service
signals
site
sites
support
users
website
)FX";

inline constexpr std::string_view canonical_txt =
    R"FX(# canonical forms: "key form"; key matches the surface token
# first, then its stem
communication communication
communities community
applic application
cabl cable
common commonality
comput computer
devic device
experi experience
inform information
peopl people
profil profile
purpos purpose
relat relation
resourc resource
servic service
site website
websit website
)FX";

}  // namespace fpcluster::fixture
