"""Words, alphabets and relation tables"""
