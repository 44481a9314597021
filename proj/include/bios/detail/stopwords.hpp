#pragma once

// Default stopword lexicon for term cleaning: the 1,000 most frequent
// general-English words, lowercased. Sorted for reproducible iteration.

#include <set>
#include <string>

namespace bios::detail {

inline const std::set<std::string>& default_stopwords() {
    static const std::set<std::string> words = {
    "a", "able", "about", "above", "across", "act", "action", "actually", "add", "addition",
    "adjective", "afraid", "africa", "after", "again", "against", "age", "ago", "agreed", "ahead",
    "air", "all", "allow", "almost", "alone", "along", "already", "also", "although", "always",
    "am", "america", "among", "amount", "an", "and", "angle", "animal", "another", "answer", "any",
    "anything", "appear", "apple", "are", "area", "arms", "army", "around", "arrived", "art", "as",
    "ask", "at", "away", "baby", "back", "bad", "ball", "bank", "base", "be", "bear", "beat",
    "beautiful", "became", "because", "become", "bed", "been", "before", "began", "begin",
    "behind", "being", "believe", "bell", "belong", "below", "beside", "best", "better", "between",
    "big", "bill", "birds", "bit", "black", "block", "blood", "blow", "blue", "board", "boat",
    "body", "bones", "book", "born", "both", "bottom", "bought", "box", "boy", "branches", "break",
    "bright", "bring", "british", "broken", "brother", "brought", "brown", "build", "building",
    "built", "burning", "business", "but", "buy", "by", "call", "came", "can", "cannot", "cant",
    "capital", "captain", "car", "care", "carefully", "carry", "case", "cat", "catch", "cattle",
    "caught", "cause", "cells", "center", "cents", "century", "certain", "chance", "change",
    "chart", "check", "chief", "child", "children", "choose", "church", "circle", "city", "class",
    "clean", "clear", "climbed", "close", "clothes", "cloud", "coast", "cold", "color", "column",
    "come", "common", "company", "compare", "complete", "compound", "conditions", "consider",
    "consonant", "contain", "continued", "control", "cook", "cool", "copy", "corn", "corner",
    "correct", "cost", "cotton", "could", "couldnt", "count", "country", "course", "covered",
    "cows", "create", "cried", "crops", "cross", "crowd", "current", "cut", "dance", "dark", "day",
    "dead", "deal", "death", "decided", "decimal", "deep", "describe", "desert", "design",
    "details", "determine", "developed", "dictionary", "did", "didnt", "died", "difference",
    "different", "difficult", "direct", "direction", "discovered", "distance", "divided",
    "division", "do", "doctor", "does", "doesnt", "dog", "dollars", "done", "dont", "door", "down",
    "draw", "drawing", "dress", "drive", "drop", "dry", "during", "each", "early", "ears", "earth",
    "east", "easy", "eat", "edge", "effect", "eggs", "eight", "either", "electric", "elements",
    "else", "end", "energy", "engine", "england", "english", "enjoy", "enough", "entered",
    "entire", "equal", "equation", "especially", "europe", "even", "evening", "ever", "every",
    "everyone", "everything", "exactly", "example", "except", "exciting", "exercise", "expect",
    "experience", "experiment", "explain", "express", "eye", "face", "fact", "factories",
    "factors", "fair", "fall", "family", "famous", "far", "farm", "farmers", "fast", "father",
    "fear", "feel", "feeling", "feet", "fell", "felt", "few", "field", "fig", "fight", "figure",
    "filled", "finally", "find", "fine", "fingers", "finished", "fire", "first", "fish", "fit",
    "five", "flat", "floor", "flow", "flowers", "fly", "follow", "food", "foot", "for", "force",
    "forest", "form", "forward", "found", "four", "fraction", "france", "free", "french", "fresh",
    "friends", "from", "front", "fruit", "full", "fun", "game", "garden", "gas", "gave", "general",
    "get", "girl", "give", "glass", "go", "god", "gold", "gone", "good", "got", "government",
    "grass", "great", "greek", "green", "grew", "ground", "group", "grow", "guess", "gun", "had",
    "hair", "half", "hand", "happened", "happy", "hard", "has", "hat", "have", "he", "head",
    "hear", "heard", "heart", "heat", "heavy", "held", "help", "her", "here", "high", "hill",
    "him", "himself", "his", "history", "hit", "hold", "hole", "home", "hope", "horse", "hot",
    "hours", "house", "how", "however", "huge", "human", "hundred", "hunting", "i", "ice", "idea",
    "if", "ill", "important", "in", "inches", "include", "increase", "indian", "indicate",
    "industry", "information", "insects", "inside", "instead", "instruments", "interest",
    "interesting", "into", "iron", "is", "island", "isnt", "it", "its", "itself", "japanese",
    "job", "joined", "jumped", "just", "keep", "kept", "key", "killed", "kind", "king", "knew",
    "know", "known", "lady", "lake", "land", "language", "large", "last", "later", "laughed",
    "law", "lay", "lead", "learn", "least", "leave", "led", "left", "legs", "length", "less",
    "let", "lets", "letter", "level", "lie", "life", "lifted", "light", "like", "line", "list",
    "listen", "little", "live", "located", "long", "look", "lost", "lot", "loud", "love", "low",
    "machine", "made", "main", "major", "make", "man", "many", "map", "march", "mark", "match",
    "material", "matter", "may", "maybe", "me", "mean", "measure", "meat", "meet", "melody",
    "members", "men", "metal", "method", "middle", "might", "mile", "milk", "million", "mind",
    "mine", "minutes", "miss", "modern", "molecules", "moment", "money", "months", "moon", "more",
    "morning", "most", "mother", "mountain", "mouth", "move", "movement", "much", "music", "must",
    "my", "name", "nation", "natural", "near", "necessary", "need", "never", "new", "next",
    "night", "no", "nor", "north", "northern", "nose", "not", "note", "nothing", "notice", "noun",
    "now", "number", "numeral", "object", "observe", "ocean", "of", "off", "office", "often", "oh",
    "oil", "old", "on", "once", "one", "only", "open", "opposite", "or", "order", "other", "our",
    "ours", "out", "outside", "over", "own", "oxygen", "page", "paint", "pair", "paper",
    "paragraph", "park", "part", "particular", "party", "passed", "past", "pattern", "pay",
    "people", "per", "perhaps", "period", "person", "phrase", "picked", "picture", "piece",
    "place", "plains", "plan", "plane", "planets", "plant", "play", "please", "plural", "poem",
    "point", "pole", "poor", "position", "possible", "pounds", "power", "practice", "prepared",
    "present", "president", "pretty", "printed", "probably", "problem", "process", "produce",
    "products", "property", "provide", "pulled", "pushed", "put", "questions", "quickly", "quiet",
    "quite", "race", "radio", "rain", "raised", "ran", "rather", "reached", "read", "ready",
    "really", "reason", "received", "record", "red", "region", "remain", "remember", "repeated",
    "report", "represent", "rest", "result", "return", "rhythm", "rich", "ride", "right", "ring",
    "rise", "river", "road", "rock", "rolled", "room", "root", "rope", "rose", "round", "row",
    "rule", "run", "safe", "said", "sail", "same", "sand", "sat", "save", "saw", "say", "scale",
    "school", "science", "scientists", "score", "sea", "seat", "second", "section", "see", "seeds",
    "seem", "seen", "sell", "send", "sense", "sent", "sentence", "separate", "serve", "set",
    "settled", "seven", "several", "shall", "shape", "sharp", "she", "ship", "shoes", "shop",
    "short", "should", "shoulder", "shouted", "show", "shown", "side", "sight", "sign", "silent",
    "similar", "simple", "since", "sing", "single", "sir", "sister", "sit", "six", "size", "skin",
    "sky", "sleep", "slowly", "small", "smell", "smiled", "snow", "so", "soft", "soil", "soldiers",
    "solution", "solve", "some", "someone", "something", "sometimes", "son", "song", "soon",
    "sound", "south", "southern", "space", "speak", "special", "speed", "spell", "spot", "spread",
    "spring", "square", "stand", "stars", "start", "state", "statement", "stay", "steel", "step",
    "stick", "still", "stone", "stood", "stop", "store", "story", "straight", "strange", "stream",
    "street", "stretched", "string", "strong", "students", "study", "subject", "substances",
    "such", "suddenly", "suffix", "sugar", "suggested", "sum", "summer", "sun", "supply",
    "suppose", "sure", "surface", "surprise", "swim", "syllables", "symbols", "system", "table",
    "tail", "take", "talk", "tall", "teacher", "team", "tell", "temperature", "ten", "terms",
    "test", "than", "that", "the", "their", "them", "themselves", "then", "there", "these", "they",
    "thick", "thin", "thing", "think", "third", "this", "those", "though", "thought", "thousands",
    "three", "through", "thus", "tied", "time", "tiny", "to", "today", "together", "told", "tone",
    "too", "took", "tools", "top", "total", "touch", "toward", "town", "track", "trade", "train",
    "travel", "tree", "triangle", "trip", "trouble", "truck", "true", "try", "tube", "turn", "two",
    "type", "uncle", "under", "underline", "understand", "unit", "until", "up", "upon", "us",
    "use", "usually", "valley", "value", "various", "verb", "very", "view", "village", "visit",
    "voice", "vowel", "wait", "walk", "wall", "want", "war", "warm", "was", "wash", "washington",
    "wasnt", "watch", "water", "waves", "way", "we", "wear", "weather", "week", "weight", "well",
    "went", "were", "west", "western", "what", "wheels", "when", "where", "whether", "which",
    "while", "white", "who", "whole", "whom", "whose", "why", "wide", "wife", "wild", "will",
    "win", "wind", "window", "wings", "winter", "wire", "wish", "with", "within", "without",
    "woman", "women", "wonder", "wont", "wood", "word", "work", "workers", "world", "would",
    "wouldnt", "write", "written", "wrong", "wrote", "yard", "year", "yellow", "yes", "yet", "you",
    "young", "your", "youre", "yourself",
    };
    return words;
}

}  // namespace bios::detail
