"""Shared word lists for fixture generation.

The caption lexicon here mirrors the defaults in superclass.data; a test
asserts the packaged vocabulary covers every caption word.
"""

COLORS = ["red", "green", "blue", "yellow", "purple", "orange", "pink", "brown"]

SHAPES = ["circle", "square", "triangle", "cross"]

DISTRACTORS = [
    "outdoors", "indoors", "vintage", "closeup", "sunny", "dark", "bright",
    "small", "large", "tiny", "huge", "old", "new", "shiny", "dull", "blurry",
    "clear", "simple", "fancy", "plain", "rustic", "modern", "classic",
    "cute", "pretty", "ugly", "nice", "cool", "warm", "cold", "wet", "dry",
    "clean", "dirty", "smooth", "rough", "soft", "hard", "light", "heavy",
    "fast", "slow", "quiet", "loud", "happy", "sad", "calm", "wild",
    "fresh", "stale",
]

TEMPLATE_WORDS = ["a", "photo", "of"]

# NLTK English stopword list.
STOPWORDS = """
i me my myself we our ours ourselves you you're you've you'll you'd your
yours yourself yourselves he him his himself she she's her hers herself it
it's its itself they them their theirs themselves what which who whom this
that that'll these those am is are was were be been being have has had
having do does did doing a an the and but if or because as until while of
at by for with about against between into through during before after
above below to from up down in out on off over under again further then
once here there when where why how all any both each few more most other
some such no nor not only own same so than too very s t can will just don
don't should should've now d ll m o re ve y ain aren aren't couldn couldn't
didn didn't doesn doesn't hadn hadn't hasn hasn't haven haven't isn isn't
ma mightn mightn't mustn mustn't needn needn't shan shan't shouldn
shouldn't wasn wasn't weren weren't won won't wouldn wouldn't
""".split()

# Common English filler vocabulary for the word tokenizer fixture and the
# BPE training corpus. Roughly frequency-ordered by band.
COMMON_WORDS = """
time people way day man thing woman life child world school state family
student group country problem hand part place case week company system
program question work government number night point home water room mother
area money story fact month lot right study book eye job word business
issue side kind head house service friend father power hour game line end
member law car city community name president team minute idea body
information back parent face others level office door health person art
war history party result change morning reason research girl guy moment
air teacher force education foot boy age policy process music market sense
nation plan college interest death experience effect use class control
care field development role effort rate heart drug show leader light voice
wife police mind price report decision son view relationship town road
arm difference value building action model season society tax director
position player record paper space ground form event official matter
center couple site project activity star table need court oil situation
cost industry figure street image phone data picture practice piece land
product doctor wall patient worker news test movie north love support
technology step baby computer type attention film tree source truth
subject rest behavior kitchen view bed bird brother catch cell color
course cup dance deal dog dream dress drink duty earth east edge egg
energy engine evening exercise face fall farm fear fire fish flower food
forest fruit future garden gas gift glass goal gold grass hair half hall
hat hill hole holiday hope horse hospital hotel ice island key king lady
lake leaf leg letter list lunch machine mail map meat metal middle milk
mountain mouth nature neck noise nose note object ocean offer page pain
paint pair park path pattern pen pencil period plant plate play pocket
point pool port post pot press prince quality queen race radio rain range
reply ring river rock roof rule run salt sand scale scene sea seat sentence
shade ship shirt shoe shop shoulder sign silver sister size skill skin sky
sleep smile snow song sound south speech spring stage station stick stone
store storm summer sun surface swim tail talk target taste tea test then
ticket tone tool tooth top touch trade train trip truck tube turn unit
valley vehicle village visit wash watch wave weather west wheel window
wine wing winter wire wood yard year zone
make get know take see come think look want give find tell ask seem feel
try leave call keep become begin help talk turn start might show hear
play run move like live believe hold bring happen write provide sit stand
lose pay meet include continue set learn change lead understand watch
follow stop create speak read allow add spend grow open walk win offer
remember love consider appear buy wait serve die send expect build stay
fall cut reach kill remain suggest raise pass sell require report decide
pull return explain hope develop carry break receive agree support hit
produce eat cover catch draw choose cause point listen realize place
close involve increase wear argue teach accept remove visit push answer
travel describe drive ride sing drop plan count enjoy share save check
good first last long great little own other old right big high different
early young important public bad same able full free low late hard major
better economic strong possible whole real american easy social only
local sure recent certain personal open difficult available likely short
single medical current wrong private past foreign fine common poor
natural significant similar hot dead central happy serious ready simple
left physical general environmental financial deep particular entire
final main green nice huge popular traditional cultural strange busy
quick thin fat flat round sharp sweet bitter loud silent empty solid
narrow wide ancient brave proud tired angry hungry thirsty gentle fierce
shy bold lucky weird normal
about above across after against along among around before behind below
beneath beside between beyond during except inside near outside since
through toward under until upon within without also always never often
sometimes usually quite rather really very too enough almost already yet
still just even ever soon now today tomorrow yesterday together apart
away back forward maybe perhaps certainly probably actually finally
suddenly quickly slowly carefully easily nearly exactly especially
instead anyway however therefore moreover meanwhile otherwise
""".split()


def caption_lexicon():
    return sorted(set(COLORS + SHAPES + DISTRACTORS + TEMPLATE_WORDS))


def full_lexicon():
    """Word-tokenizer vocabulary: base lexicon plus plural forms."""
    base = set(COMMON_WORDS) | set(STOPWORDS) | set(caption_lexicon())
    out = set(base)
    for w in sorted(base):
        if not w.isalpha():
            continue
        if w.endswith(("s", "x", "z", "ch", "sh")):
            out.add(w + "es")
        elif w.endswith("y") and len(w) > 2 and w[-2] not in "aeiou":
            out.add(w[:-1] + "ies")
        else:
            out.add(w + "s")
    return sorted(out)
