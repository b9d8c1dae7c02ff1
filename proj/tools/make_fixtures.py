#!/usr/bin/env python3
"""Regenerate the bundled mini-corpus under data/.

Output is a pure function of the seed, so re-running leaves the tree unchanged.
The CMU subset is cut from a full cmudict.dict passed with --cmudict; without
it the existing data/cmudict/cmudict.dict is kept as is.
"""

import argparse
import json
import random
import re
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"

SUBJECT_CONTEXT = {
    "Sex": ["hookup", "bed", "naked", "kiss", "horny", "sexy", "nude", "porn"],
    "Drugs": ["weed", "smoke", "high", "pipe", "joint", "dealer", "stoned", "herb"],
    "Music": ["song", "beat", "band", "guitar", "concert", "album", "rapper", "drums"],
    "Name": ["person", "guy", "friend", "named", "called", "people", "someone", "everyone"],
    "College": ["campus", "exam", "professor", "dorm", "class", "semester", "homework", "lecture"],
    "Sports": ["game", "team", "ball", "coach", "score", "player", "match", "goal"],
    "Internet": ["online", "post", "meme", "website", "chat", "forum", "troll", "download"],
    "Religion": ["church", "god", "pray", "faith", "priest", "temple", "holy", "prayer"],
    "Food": ["eat", "pizza", "burger", "snack", "dinner", "cheese", "sandwich", "hungry"],
    "Work": ["boss", "office", "job", "shift", "meeting", "salary", "coworker", "overtime"],
}

FILLERS = [
    "that {w} was so {a} last night",
    "my friend said {w} when we talked about {c}",
    "dude stop being such a {w} about the {c}",
    "we were all {w} after the {c}",
    "i can not believe the {c} was that {w}",
    "she told me the {c} is {w} now",
    "he always says {w} around the {c}",
    "everyone at the {c} was talking about {w}",
]

ADJECTIVES = ["crazy", "wild", "lame", "funny", "weird", "epic", "chill", "awesome"]

ONSETS = ["s", "sh", "f", "ch", "j", "sk", "fl", "sn", "tw", "b", "gr", "z", "dr", "bl", "th"]
NUCLEI = ["a", "e", "i", "o", "u", "oo", "ee", "ai"]
CODAS = ["", "b", "g", "k", "m", "n", "p", "t", "z", "ck", "sh", "x", "nk"]
ENDINGS = ["", "", "y", "ie", "er", "o", "tard", "zilla", "ster", "ness"]

FEMALE_NAMES = ["ria", "debby", "annabelle", "jessica", "ashley", "stacy", "brittany", "amber",
                "tiffany", "crystal"]
MALE_NAMES = ["mike", "kevin", "brad", "chad", "steve", "jake", "tyler", "kyle", "derek", "josh"]
UNKNOWN_NAMES = ["alex", "jordan", "sam"]

GENDER_PAIRS = [("he", "she"), ("man", "woman"), ("boy", "girl"), ("father", "mother"),
                ("brother", "sister"), ("king", "queen"), ("son", "daughter"), ("husband", "wife"),
                ("guy", "gal"), ("dude", "chick")]

OCCUPATIONS = ["gangster", "officer", "warrior", "commander", "soldier", "stylist", "sailor",
               "socialite", "counselor", "missionary", "nurse", "doctor", "teacher", "engineer",
               "lawyer", "cook", "pilot", "farmer", "secretary", "dancer"]

RELIGIONS = ["sikh", "muslim", "islam", "jews", "christian", "agnostic", "atheist", "buddhist",
             "hindu", "jewish"]

RELIGIOUS_PREJUDICES = ["terrorist", "illegal", "good", "sexy", "greedy", "violent", "peaceful",
                        "stupid"]

PREJUDICE_TERMS = ["slut", "whore", "shrew", "bitch", "faggot", "sexy", "fuck", "fucked", "nude",
                   "porn", "cocksucker"]

STANDARD_WORDS = """
able about above accept across act action add address admit adult affect after again against
age agency agent ago agree ahead air all allow almost alone along already also although always
among amount analysis animal another answer any anyone anything appear apply approach area argue
arm around arrive art article artist ask assume attack attention attorney audience author avoid
away baby back bad bag ball bank bar base beat beautiful because become bed before begin behavior
behind believe benefit best better between beyond big bill billion bit black blood blue board
body book born both box boy break bring brother budget build building business but buy call
camera campaign can cancer candidate capital car card care career carry case catch cause cell
center central century certain chair challenge chance change character charge check child choice
choose church citizen city civil claim class clear close coach cold collection college color
come common community company compare computer concern condition conference congress consider
consumer contain continue control cost could country couple course court cover create crime
cultural culture cup current customer cut dark data daughter day dead deal death debate decade
decide decision deep defense degree describe design despite detail determine develop difference
different difficult dinner direction director discover discuss disease doctor dog door down draw
dream drive drop drug during each early east easy eat economic economy edge education effect
effort eight either election else employee end energy enjoy enough enter entire environment
especially establish even evening event ever every evidence exactly example executive exist
expect experience expert explain eye face fact factor fail fall family far fast father fear
federal feel feeling few field fight figure fill film final finally financial find fine finger
finish fire firm first fish five floor fly focus follow food foot force foreign forget form
former forward four free friend from front full fund future game garden gas general generation
get girl give glass goal good government great green ground group grow growth guess gun guy hair
half hand hang happen happy hard have head health hear heart heat heavy help her here herself
high him himself his history hit hold home hope hospital hot hotel hour house how however huge
human hundred husband idea identify image imagine impact important improve include including
increase indeed indicate individual industry information inside instead institution interest
interesting international interview into investment involve issue item itself job join just
keep key kid kill kind kitchen know knowledge land language large last late later laugh law lawyer
lay lead leader learn least leave left leg legal less let letter level lie life light like likely
line list listen little live local long look lose loss lot love low machine magazine main maintain
major majority make man manage management manager many market marriage material matter may maybe
mean measure media medical meet meeting member memory mention message method middle might
military million mind minute miss mission model modern moment money month more morning most
mother mouth move movement movie much music must myself name nation national natural nature near
nearly necessary need network never new news newspaper next nice night none nor north not note
nothing notice now number occur off offer office officer official often oil old once one only
onto open operation opportunity option order organization other others our out outside over own
owner page pain painting paper parent part participant particular particularly partner party
pass past patient pattern pay peace people per perform performance perhaps period person personal
phone physical pick picture piece place plan plant play player point police policy political
politics poor popular population position positive possible power practice prepare present
president pressure pretty prevent price private probably problem process produce product
production professional professor program project property protect prove provide public pull
purpose push put quality question quickly quite race radio raise range rate rather reach read
ready real reality realize really reason receive recent recently recognize record red reduce
reflect region relate relationship religious remain remember remove report represent republican
require research resource respond response rest result return reveal rich right rise risk road
rock role room rule run safe same save say scene school science scientist score sea season seat
second section security see seek seem sell send senior sense series serious serve service set
seven several sex sexual shake share she shoot short shot should shoulder show side sign
significant similar simple simply since sing single sister sit site situation six size skill
skin small smile social society soldier some somebody someone something sometimes son song soon
sort sound source south southern space speak special specific speech spend sport spring staff
stage stand standard star start state statement station stay step still stock stop store story
strategy street strong structure student study stuff style subject success successful such
suddenly suffer suggest summer support sure surface system table take talk task tax teach
teacher team technology television tell ten tend term test than thank that the their them
themselves then theory there these they thing think third this those though thought thousand
threat three through throughout throw thus time today together tonight too top total tough toward
town trade traditional training travel treat treatment tree trial trip trouble true truth try turn
two type under understand unit until upon usually value various very victim view violence visit
voice vote wait walk wall want war watch water way weapon wear week weight well west western what
whatever wheel when where whether which while white who whole whom whose why wide wife will win
wind window wish with within without woman wonder word work worker world worry would write writer
wrong yard yeah year yes yet you young your yourself cat woody boo
""".split()

# Real formation examples; the generated ones below fill each class to size.
GOLD_SEED = [
    ("LOL", "Alphabetism", "laughing|out|loud"),
    ("O.M.G.", "Alphabetism", "oh|my|god"),
    ("B.F.F.", "Alphabetism", "best|friends|forever"),
    ("WTF", "Alphabetism", "what|the|fuck"),
    ("brunch", "Blend", "breakfast|lunch"),
    ("smog", "Blend", "smoke|fog"),
    ("chillax", "Blend", "chill|relax"),
    ("hangry", "Blend", "hungry|angry"),
    ("frenemy", "Blend", "friend|enemy"),
    ("ginormous", "Blend", "giant|enormous"),
    ("roach", "Clipping", "cockroach"),
    ("nigg", "Clipping", "nigger"),
    ("slowmo", "Clipping", "slow motion"),
    ("fam", "Clipping", "family"),
    ("sesh", "Clipping", "session"),
    ("bro", "Clipping", "brother"),
    ("boo boo", "Reduplicative", ""),
    ("flip-flop", "Reduplicative", ""),
    ("bitsy-witsy", "Reduplicative", ""),
    ("moodle-schmoodle", "Reduplicative", ""),
    ("hip-hop", "Reduplicative", ""),
    ("okey-dokey", "Reduplicative", ""),
]

CLIP_SOURCES = ["professor", "laboratory", "gymnasium", "examination", "hippopotamus", "influenza",
                "refrigerator", "veterinarian", "advertisement", "mathematics", "application",
                "limousine", "pantyhose", "champagne", "delicatessen", "alligator", "telephone",
                "cockroach", "omnibus", "caravan", "situation", "information", "celebrity",
                "dormitory", "condominium", "memorandum", "photograph", "popular", "promotion",
                "detective"]


def pseudo_word(rng):
    word = rng.choice(ONSETS) + rng.choice(NUCLEI) + rng.choice(CODAS)
    if rng.random() < 0.5:
        word += rng.choice(NUCLEI[:5]) + rng.choice(CODAS)
    return word + rng.choice(ENDINGS)


def letters_phrase(rng):
    words = [rng.choice(STANDARD_WORDS) for _ in range(rng.randint(2, 4))]
    initials = [w[0].upper() for w in words]
    style = rng.randrange(3)
    if style == 0:
        head = ".".join(initials) + "."
    elif style == 1:
        head = "".join(initials)
    else:
        head = ".".join(initials)
    return head, "|".join(words)


def blend(rng):
    a, b = rng.sample(STANDARD_WORDS, 2)
    while len(a) < 4 or len(b) < 4:
        a, b = rng.sample(STANDARD_WORDS, 2)
    cut_a = rng.randint(2, len(a) - 1)
    cut_b = rng.randint(1, len(b) - 2)
    return a[:cut_a] + b[cut_b:], f"{a}|{b}"


def clipping(rng):
    source = rng.choice(CLIP_SOURCES)
    n = rng.randint(3, min(6, len(source) - 2))
    if rng.random() < 0.7:
        return source[:n], source
    return source[-n:], source


def reduplicative(rng):
    onset, vowel, coda = rng.choice(ONSETS), rng.choice("aeiou"), rng.choice(CODAS)
    base = onset + vowel + coda + rng.choice(["", "y", "ie", "er"])
    kind = rng.randrange(4)
    if kind == 0:
        first, second = base, base
    elif kind == 1:
        first = onset + "i" + base[len(onset) + 1:]
        second = onset + rng.choice("ao") + base[len(onset) + 1:]
    elif kind == 2:
        first = base
        second = rng.choice([c for c in "bwmpdl" if not onset.startswith(c)]) + base[len(onset):]
        first = onset[-1] + base[len(onset):] if len(onset) > 1 else first
    else:
        first, second = base, "shm" + base[len(onset):]
    return f"{first}{rng.choice(['-', ' '])}{second}"


def make_gold(rng, per_class=30):
    rows = list(GOLD_SEED)
    seen = {w.lower() for w, _, _ in rows}
    makers = {
        "Alphabetism": letters_phrase,
        "Blend": blend,
        "Clipping": clipping,
    }
    counts = {c: sum(1 for _, k, _ in rows if k == c) for c in
              ("Alphabetism", "Blend", "Clipping", "Reduplicative")}
    for cls in counts:
        while counts[cls] < per_class:
            if cls == "Reduplicative":
                word, comps = reduplicative(rng), ""
            else:
                word, comps = makers[cls](rng)
            if word.lower() in seen or not word:
                continue
            seen.add(word.lower())
            rows.append((word, cls, comps))
            counts[cls] += 1
    return rows


def sentence(rng, word, context):
    template = rng.choice(FILLERS)
    return template.format(w=word, c=rng.choice(context), a=rng.choice(ADJECTIVES))


def make_slang(rng):
    entries = []
    seen = set()

    def add(headword, subjects, examples, definition, votes=None):
        if headword.lower() in seen:
            return
        seen.add(headword.lower())
        if votes is None:
            total = rng.choice([rng.randint(10, 99), rng.randint(100, 900), rng.randint(100, 3000)])
        else:
            total = votes
        up = rng.randint(total // 2, total)
        entry = {
            "headword": headword,
            "definitions": [definition],
            "examples": examples + [f"everyone keeps saying {headword} lately"],
            "upvotes": up,
            "downvotes": total - up,
        }
        if subjects:
            entry["subjects"] = subjects
        entry["year_added"] = rng.randint(2004, 2017)
        entries.append(entry)

    for subject, context in SUBJECT_CONTEXT.items():
        made = 0
        while made < 24:
            word = pseudo_word(rng)
            if word in seen or word in STANDARD_WORDS:
                continue
            examples = [sentence(rng, word, context) for _ in range(3)]
            examples.append(f"{word} {rng.choice(context)} {rng.choice(context)} {word}")
            definition = f"slang for {rng.choice(context)} or {rng.choice(context)}"
            add(word, [subject], examples, definition, votes=rng.randint(100, 2500) if made < 20 else None)
            made += 1

    for word, _, comps in make_gold(random.Random(11), per_class=10):
        context = rng.choice(list(SUBJECT_CONTEXT.values()))
        add(word, None, [sentence(rng, word, context) for _ in range(2)],
            "formed from " + (comps.replace("|", " and ") or "a repeated sound"))

    # Gendered usage: female names drift toward prejudice terms.
    for name in FEMALE_NAMES:
        examples = [f"{name} is such a {rng.choice(PREJUDICE_TERMS)} she is a {rng.choice(PREJUDICE_TERMS)}"
                    for _ in range(3)]
        examples.append(f"that girl {name} is my sister and a {rng.choice(OCCUPATIONS[5:])}")
        add(name, ["Name"], examples, "a girl who is always around", votes=rng.randint(100, 900))
    for name in MALE_NAMES:
        examples = [f"{name} is such a guy he is the {rng.choice(OCCUPATIONS[:5])}" for _ in range(2)]
        examples.append(f"{name} is a {rng.choice(PREJUDICE_TERMS)} man and my brother")
        examples.append(f"that boy {name} plays the {rng.choice(SUBJECT_CONTEXT['Sports'])}")
        add(name, ["Name"], examples, "a guy who is always around", votes=rng.randint(100, 900))
    for name in UNKNOWN_NAMES:
        add(name, ["Name"], [f"{name} is someone everyone knows" for _ in range(2)], "a person")

    for male, female in GENDER_PAIRS:
        for occupation in OCCUPATIONS:
            pole = female if occupation in OCCUPATIONS[5:10] or rng.random() < 0.3 else male
            key = f"{occupation} {pole}"
            add(key, ["Work"],
                [f"the {occupation} was a {pole} and {pole} said {occupation} work is hard",
                 f"{pole} became a {occupation} last year", f"such a {key} at the {rng.choice(SUBJECT_CONTEXT['Work'])}"],
                f"a {pole} working as a {occupation}")
    for male, female in GENDER_PAIRS:
        add(f"{male} and {female}", None,
            [f"{male} likes {female} and {female} likes {male}",
             f"the {male} and the {female} went home"],
            f"{male} paired with {female}")

    for religion in RELIGIONS:
        for prejudice in RELIGIOUS_PREJUDICES:
            if rng.random() < 0.5:
                add(f"{religion} {prejudice}", ["Religion"],
                    [f"calling a {religion} {prejudice} is a stereotype about the {religion} faith",
                     f"the {religion} {prejudice} went to the {rng.choice(SUBJECT_CONTEXT['Religion'])}",
                     f"some think {religion} people are {prejudice}"],
                    f"a {prejudice} {religion}")
        add(f"{religion} vibe", ["Religion"],
            [f"the {religion} went to pray at the {rng.choice(SUBJECT_CONTEXT['Religion'])}",
             f"{religion} vibe at the {rng.choice(SUBJECT_CONTEXT['Religion'])}"],
            f"a {religion} person")

    for term in PREJUDICE_TERMS:
        add(f"{term} alert", ["Sex"],
            [f"{term} {rng.choice(SUBJECT_CONTEXT['Sex'])} {term}",
             f"she said {term} and he said {term}"],
            f"an insult like {term}")

    rng.shuffle(entries)
    return entries


def write_lines(path, lines):
    path.write_text("".join(line + "\n" for line in lines))


def cut_cmudict(source, words):
    keep = {w.lower() for w in words}
    out = []
    for line in source.read_text(encoding="latin-1").splitlines():
        head = line.split(" ", 1)[0]
        if head.split("(")[0] in keep:
            out.append(line)
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=2017)
    parser.add_argument("--cmudict", type=Path, help="full cmudict.dict to cut the subset from")
    args = parser.parse_args()
    rng = random.Random(args.seed)

    fixtures = DATA / "fixtures"
    lexicons = DATA / "lexicons"
    fixtures.mkdir(parents=True, exist_ok=True)
    lexicons.mkdir(parents=True, exist_ok=True)

    entries = make_slang(rng)
    write_lines(fixtures / "slang.jsonl", [json.dumps(e, sort_keys=True) for e in entries])

    std_rng = random.Random(args.seed + 1)
    write_lines(fixtures / "standard.tsv",
                [f"{w}\tstandard sense of {w} number {std_rng.randint(1, 9)}" for w in sorted(set(STANDARD_WORDS))])

    gold = make_gold(random.Random(args.seed + 2))
    write_lines(fixtures / "gold.tsv", ["# word\tclass\tcomponents"] + [f"{w}\t{c}\t{p}" for w, c, p in gold])

    write_lines(fixtures / "mdl_words.txt", ["dogcat", "catdog", "dog", "cat"])

    write_lines(lexicons / "prejudice.txt", PREJUDICE_TERMS)
    write_lines(lexicons / "religions.txt", RELIGIONS)
    write_lines(lexicons / "religious_prejudices.txt", RELIGIOUS_PREJUDICES)
    write_lines(lexicons / "occupations.txt", OCCUPATIONS)
    write_lines(lexicons / "gender_pairs.txt", [f"{m}\t{f}" for m, f in GENDER_PAIRS])
    write_lines(lexicons / "names_gender.csv",
                ["name,gender"] + [f"{n},f" for n in FEMALE_NAMES] + [f"{n},m" for n in MALE_NAMES]
                + [f"{n},unknown" for n in UNKNOWN_NAMES])
    write_lines(lexicons / "names.txt", FEMALE_NAMES + MALE_NAMES + UNKNOWN_NAMES)

    if args.cmudict:
        vocab = set(STANDARD_WORDS)
        for e in entries:
            for text in [e["headword"], *e["definitions"], *e["examples"]]:
                vocab.update(re.findall(r"[a-z']+", text.lower()))
        (DATA / "cmudict").mkdir(exist_ok=True)
        write_lines(DATA / "cmudict" / "cmudict.dict", cut_cmudict(args.cmudict, vocab))


if __name__ == "__main__":
    main()
