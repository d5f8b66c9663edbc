"""Images and preimages of state sets under words.

A walkthrough of the core vocabulary on the classic 4-state slowly
synchronizing automaton: letter ``a`` cycles the states, letter ``b`` sends
the last state to the first and fixes the rest.
"""

from preimages import StateSet, Word, apply_word, cerny_automaton, preimage_word

aut = cerny_automaton(4)
print("transition table (rows = states, columns = letters a, b):")
for q in range(aut.n):
    print(f"  {q}: {list(aut.rows[q])}")

# The image S.w applies the word letter by letter; it can only lose states.
s = aut.state_set([1, 2])
print("\nS =", s)
for text in ("a", "aa", "aab"):
    print(f"  S.{text}  =", apply_word(aut, s, Word.from_text(text)))
print("aab merges the pair: it is a shortest word *compressing* S.")

# The preimage S.w^-1 collects every state that w maps into S; it can grow.
print("\npreimages of S:")
for text in ("a", "b", "ba"):
    print(f"  S.{text}^-1 =", preimage_word(aut, s, Word.from_text(text)))
print("ba is a shortest word *extending* S: the preimage has 3 > 2 states.")

# Preimages can also shrink: that is the mirror image of extending the
# complement.
t = aut.state_set([1, 3])
print("\nT =", t, " T.b^-1 =", preimage_word(aut, t, Word.from_text("b")),
      " (b shrinks T)")

# Sanity identities: the empty word acts as the identity, preimages compose
# from the right, and T <= S.w^-1 exactly when T.w <= S.
u, v = Word.from_text("ab"), Word.from_text("ba")
lhs = preimage_word(aut, s, u + v)
rhs = preimage_word(aut, preimage_word(aut, s, v), u)
print("\ncomposition check: S.(uv)^-1 == (S.v^-1).u^-1:", lhs == rhs)
t = StateSet.from_states(4, [0, 1])
galois = t.issubset(preimage_word(aut, s, v)) == apply_word(aut, t, v).issubset(s)
print("adjunction check:  T <= S.v^-1  <=>  T.v <= S:", galois)
