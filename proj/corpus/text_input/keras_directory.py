import tensorflow as tf


def standardize(text, label):
    return tf.strings.lower(text), label


raw = tf.keras.utils.text_dataset_from_directory("reviews/")
clean = raw.map(standardize)  # expect: DPM001
